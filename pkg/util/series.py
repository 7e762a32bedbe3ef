from fractions import Fraction
from math import inf


def _exact(c):
    return Fraction(c) if isinstance(c, int) else c


class Series:
    """Truncated Laurent series sum c_k x^k, exact for every exponent below prec."""

    __slots__ = ('coeffs', 'prec')

    def __init__(self, coeffs=None, prec=inf):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if k < prec and c}
        self.prec = prec

    @classmethod
    def monomial(cls, c, k=0):
        return cls({k: c})

    @classmethod
    def polynomial(cls, coeffs):
        return cls(dict(enumerate(coeffs)))

    def __repr__(self):
        return f'Series({self.coeffs}, prec={self.prec})'

    def is_exact(self):
        return self.prec == inf

    def valuation(self):
        return min(self.coeffs) if self.coeffs else self.prec

    def leading(self):
        v = min(self.coeffs)
        return v, self.coeffs[v]

    def coefficient(self, k):
        if k >= self.prec:
            raise ValueError(f'coefficient x^{k} lies beyond the truncation order {self.prec}')
        return self.coeffs.get(k, 0)

    def truncate(self, prec):
        return Series(self.coeffs, min(self.prec, prec))

    def shift(self, k):
        return Series({e + k: c for e, c in self.coeffs.items()}, self.prec + k)

    def scale(self, c):
        return Series({k: v * c for k, v in self.coeffs.items()}, self.prec)

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        out = {k: c for k, c in self.coeffs.items() if k < prec}

        for k, c in other.coeffs.items():
            if k < prec:
                out[k] = out.get(k, 0) + c

        return Series(out, prec)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, limit=inf):
        prec = min(self.valuation() + other.prec, other.valuation() + self.prec, limit)
        out = {}

        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j < prec:
                    out[i + j] = out.get(i + j, 0) + a * b

        return Series(out, prec)

    def __mul__(self, other):
        return self.mul(other)

    def _unit_inverse(self, prec):
        # self has valuation 0 and leading coefficient 1
        prec = max(min(prec, self.prec), 1)
        if prec == inf:
            raise ValueError('the inverse of a non-monomial series needs a finite target order')

        b = [1]
        for m in range(1, prec):
            acc = 0
            for j in range(1, m + 1):
                u = self.coeffs.get(j)
                if u:
                    acc = acc + u * b[m - j]
            b.append(-acc)

        return Series(dict(enumerate(b)), prec)

    def power(self, k, target=inf):
        """self^k with every coefficient below target exact (k may be negative)."""

        if not self.coeffs:
            if k > 0:
                return Series({}, self.prec)
            raise ZeroDivisionError('power of a series with no known nonzero coefficient')

        v, c = self.leading()
        c = _exact(c)
        unit = self.shift(-v).scale(1 / c)
        # unit^k is needed below target - k v; keep at least the constant term
        need = max(target - k * v, 1)

        if k >= 0:
            base = unit
        elif len(unit.coeffs) == 1 and unit.is_exact():
            base = Series({0: 1})
        else:
            base = unit._unit_inverse(need)

        result = Series({0: 1})
        for _ in range(abs(k)):
            result = result.mul(base, need)

        return result.shift(k * v).scale(c ** k)

    def inverse(self, target=inf):
        return self.power(-1, target)

    def derivative(self):
        return Series({k - 1: k * c for k, c in self.coeffs.items() if k}, self.prec - 1)
