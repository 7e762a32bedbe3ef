"""
Exact arithmetic in the cyclotomic field Q(e), e = exp(2 pi i / N).

Elements are stored as their residue modulo the N-th cyclotomic polynomial,
i.e. as a tuple of phi(N) Fractions in the power basis 1, e, ..., e^(phi(N)-1).
That residue is unique, so equality is tuple equality.
"""

from util.errors import CyclotomicZeroDivision
from fractions import Fraction
from functools import lru_cache
import numpy as np
import sympy


class CyclotomicField:
    def __init__(self, n):
        if n < 1:
            raise ValueError(f'cyclotomic order must be positive, got {n}')

        self.n = n

        x = sympy.Symbol('x')
        phi = sympy.Poly(sympy.cyclotomic_poly(n, x), x)
        self.phi = [int(c) for c in reversed(phi.all_coeffs())]  # low degree first, monic
        self.degree = len(self.phi) - 1

        self.zero = CycNum(self, (Fraction(0),) * self.degree)
        self.one = CycNum(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

        self._eps = [self._from_poly([0] * a + [1]) for a in range(n)]

    def __repr__(self):
        return f'CyclotomicField({self.n})'

    def _reduce(self, poly):
        poly = [Fraction(c) for c in poly]
        d = self.degree

        for k in range(len(poly) - 1, d - 1, -1):
            c = poly[k]
            if c:
                for j in range(d + 1):
                    poly[k - d + j] -= c * self.phi[j]

        poly = poly[:d] + [Fraction(0)] * (d - len(poly))
        return tuple(poly)

    def _from_poly(self, poly):
        return CycNum(self, self._reduce(poly))

    def make(self, coeffs):
        if len(coeffs) > self.n:
            raise ValueError(f'at most {self.n} coefficients allowed in Q(e_{self.n}), got {len(coeffs)}')

        return self._from_poly(list(coeffs) or [0])

    def eps(self, a):
        return self._eps[a % self.n]

    def coerce(self, x):
        if isinstance(x, CycNum):
            if x.field is not self:
                raise ValueError(f'cannot mix elements of {x.field} and {self}')
            return x

        if isinstance(x, (int, Fraction)):
            return CycNum(self, (Fraction(x),) + (Fraction(0),) * (self.degree - 1))

        raise TypeError(f'cannot coerce {type(x).__name__} into {self}')

    def __call__(self, x):
        return self.coerce(x)

    def random(self, rng, height=5):
        return self.make([Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(self.n)])


@lru_cache(maxsize=None)
def cyclotomic_field(n):
    return CyclotomicField(n)


class CycNum:
    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _other(self, other):
        try:
            return self.field.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return CycNum(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return CycNum(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.field, tuple(a * other for a in self.coeffs))

        other = self._other(other)
        if other is None:
            return NotImplemented

        if other.is_rational():
            r = other.coeffs[0]
            return CycNum(self.field, tuple(a * r for a in self.coeffs))
        if self.is_rational():
            r = self.coeffs[0]
            return CycNum(self.field, tuple(r * b for b in other.coeffs))

        prod = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b

        return CycNum(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise CyclotomicZeroDivision(f'inverse of zero in {self.field}')

        if self.is_rational():
            return self.field.coerce(1 / self.coeffs[0])

        # solve (self * y) = 1 on the power basis; columns are self * e^j
        d = self.field.degree
        cols = []
        for j in range(d):
            cols.append((self * self.field._from_poly([0] * j + [1])).coeffs)

        aug = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]

        for c in range(d):
            pivot = next(r for r in range(c, d) if aug[r][c] != 0)
            aug[c], aug[pivot] = aug[pivot], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [v * inv for v in aug[c]]
            for r in range(d):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]

        return CycNum(self.field, tuple(aug[i][d] for i in range(d)))

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented

        base = self if k >= 0 else self.inverse()
        result = self.field.one
        k = abs(k)

        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1

        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.n, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f'{self} is not rational')
        return self.coeffs[0]

    def to_complex(self):
        # embedding e -> exp(2 pi i / N); only ever used to propose candidates
        n = self.field.n
        return complex(sum(float(c) * np.exp(2j * np.pi * a / n) for a, c in enumerate(self.coeffs)))

    def __str__(self):
        terms = []

        for a, c in enumerate(self.coeffs):
            if not c:
                continue
            if a == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f'e({a})')
            else:
                terms.append(f'{c}*e({a})')

        return ' + '.join(terms).replace('+ -', '- ') if terms else '0'

    def __repr__(self):
        return f'CycNum({self})'


def cyc_make(field, coeffs):
    return field.make(coeffs)


def eps_pow(field, a):
    return field.eps(a)


def cyc_arith(op, x, y=None):
    if op == 'add':
        return x + y
    if op == 'neg':
        return -x
    if op == 'mul':
        return x * y
    if op == 'inv':
        return x.inverse()
    if op == 'eq':
        return x == y
    if op == 'is_zero':
        return x.is_zero()

    raise ValueError(f'unknown cyclotomic operation: {op}')
