"""
sl_N in the clock-and-shift basis J_ab = beta^a gamma^-b, with the two
commuting order-N automorphisms Ad(gamma), Ad(beta), weights on the twisted
Cartan h = span(H_b = J_0b) and finite-dimensional modules.
"""

from util.cyclofield import cyclotomic_field
from util.errors import InvalidModuleError
from util import linalg
from collections import namedtuple
from functools import lru_cache
import numpy as np


class SlN:
    def __init__(self, n):
        if n < 2:
            raise ValueError(f'sl_N needs N >= 2, got {n}')

        self.n = n
        self.field = cyclotomic_field(n)
        self.zero = self.field.zero
        self.one = self.field.one

        self.beta, self.gamma = make_beta_gamma(n)
        self.basis = [(a, b) for a in range(n) for b in range(n) if (a, b) != (0, 0)]
        self.cartan = [(0, b) for b in range(1, n)]

        self._j = {}

    def __repr__(self):
        return f'sl({self.n})'

    def eps(self, a):
        return self.field.eps(a)

    def j(self, a, b):
        """matrix of J_ab = beta^a gamma^-b"""

        key = (a % self.n, b % self.n)

        if key not in self._j:
            self._j[key] = mat_power(self.beta, key[0]) @ mat_power(self.gamma, -key[1])

        return self._j[key]

    def element(self, a, b, c=1):
        return LieElement(self, {(a, b): c})

    def h(self, b, c=1):
        return self.element(0, b, c)

    def bracket_coefficient(self, a, b, c, d):
        """[J_ab, J_cd] = coefficient * J_(a+c, b+d)"""

        return self.eps(-b * c) - self.eps(-a * d)

    def from_matrix(self, mat):
        # coefficient of J_ab is tr(J_ab^-1 X) / N with J_ab^-1 = gamma^b beta^-a
        terms = {}

        for a, b in self.basis:
            inv = mat_power(self.gamma, b) @ mat_power(self.beta, -a)
            c = mat_trace(inv @ mat) / self.n
            if c:
                terms[(a, b)] = c

        if mat_trace(mat):
            raise ValueError('matrix is not traceless')

        return LieElement(self, terms)

    def random_element(self, rng, support=3):
        keys = rng.sample(self.basis, min(support, len(self.basis)))
        return LieElement(self, {k: self.field.random(rng, 3) for k in keys})

    def random_cartan(self, rng):
        return LieElement(self, {k: self.field.random(rng, 3) for k in self.cartan})


@lru_cache(maxsize=None)
def sl(n):
    return SlN(n)


def make_beta_gamma(n):
    field = cyclotomic_field(n)

    beta = np.array([[field.zero] * n for _ in range(n)], dtype=object)
    for i in range(n - 1):
        beta[i, i + 1] = field.one
    beta[n - 1, 0] = field.one

    gamma = np.array([[field.zero] * n for _ in range(n)], dtype=object)
    for i in range(n):
        gamma[i, i] = field.eps(-i)

    return beta, gamma


def mat_power(mat, k):
    n = mat.shape[0]
    field = mat[0, 0].field

    # beta and gamma (and every J_ab) have order dividing N
    result = linalg.identity(n, field.zero, field.one)
    for _ in range(k % n):
        result = result @ mat

    return result


def mat_trace(mat):
    total = 0
    for i in range(mat.shape[0]):
        total = total + mat[i, i]
    return total


def mat_equal(a, b):
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


class LieElement:
    __slots__ = ('gauge', 'terms')

    def __init__(self, gauge, terms=None):
        self.gauge = gauge
        self.terms = {}

        n = gauge.n
        for (a, b), c in (terms or {}).items():
            key = (a % n, b % n)

            if not c:
                continue
            if key == (0, 0):
                raise ValueError('J_00 is the identity and is not in sl_N')

            c = self.terms.get(key, 0) + c
            if c:
                self.terms[key] = c
            else:
                self.terms.pop(key, None)

    def __repr__(self):
        inner = ', '.join(f'J{a}{b}: {c}' for (a, b), c in sorted(self.terms.items()))
        return f'LieElement({inner})'

    def items(self):
        return self.terms.items()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self

        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c

        return LieElement(self.gauge, terms)

    __radd__ = __add__

    def __neg__(self):
        return LieElement(self.gauge, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return LieElement(self.gauge, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def is_cartan(self):
        return all(a == 0 for a, _ in self.terms)

    def bracket(self, other):
        g = self.gauge
        out = {}

        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                k = g.bracket_coefficient(a, b, c, d)
                if k:
                    key = ((a + c) % g.n, (b + d) % g.n)
                    out[key] = out.get(key, 0) + k * x * y

        return LieElement(g, out)

    def inner(self, other):
        """tr(self * other) in the defining representation"""

        g = self.gauge
        total = g.zero

        for (a, b), x in self.terms.items():
            y = other.terms.get(((-a) % g.n, (-b) % g.n))
            if y:
                total = total + g.n * g.eps(a * b) * x * y  # eps^(-bc) with c = -a

        return total

    def ad_gamma(self, k=1):
        g = self.gauge
        return LieElement(g, {(a, b): c * g.eps(k * a) for (a, b), c in self.terms.items()})

    def ad_beta(self, k=1):
        g = self.gauge
        return LieElement(g, {(a, b): c * g.eps(k * b) for (a, b), c in self.terms.items()})

    def to_matrix(self):
        g = self.gauge
        total = np.array([[g.zero] * g.n for _ in range(g.n)], dtype=object)

        for (a, b), c in self.terms.items():
            total = total + g.j(a, b) * c

        return total


def j_basis(gauge, a, b):
    return gauge.j(a, b)


def ad_auto(which, x, k=1):
    if which == 'gamma':
        return x.ad_gamma(k)
    if which == 'beta':
        return x.ad_beta(k)

    raise ValueError(f'unknown automorphism: {which}')


def inner(x, y):
    return x.inner(y)


def adjoint_trace_inner(x, y):
    """(1/2N) tr(ad x ad y), computed from brackets"""

    g = x.gauge
    total = g.zero

    for key in g.basis:
        e = LieElement(g, {key: 1})
        c = x.bracket(y.bracket(e)).terms.get(key)
        if c:
            total = total + c

    return total / (2 * g.n)


class Weight:
    """A linear functional on h, stored by its values on H_1 .. H_{N-1}."""

    __slots__ = ('gauge', 'values')

    def __init__(self, gauge, values):
        if len(values) != gauge.n - 1:
            raise ValueError(f'a weight of sl_{gauge.n} needs {gauge.n - 1} values, got {len(values)}')

        self.gauge = gauge
        self.values = tuple(gauge.field.coerce(v) for v in values)

    @classmethod
    def zero(cls, gauge):
        return cls(gauge, [0] * (gauge.n - 1))

    @classmethod
    def from_diagonal(cls, gauge, diag):
        # H_b = gamma^-b = diag(eps^(b i))
        f = gauge.field
        vals = []

        for b in range(1, gauge.n):
            total = f.zero
            for i, w in enumerate(diag):
                total = total + f.eps(b * i) * w
            vals.append(total)

        return cls(gauge, vals)

    def to_diagonal(self):
        """traceless diagonal coordinates w_i"""

        g = self.gauge
        out = []

        for i in range(g.n):
            total = g.zero
            for b, v in enumerate(self.values, 1):
                total = total + v * g.eps(-b * i)
            out.append(total / g.n)

        return out

    def __call__(self, h):
        if not h.is_cartan():
            raise ValueError(f'{h} is not in the Cartan subalgebra')

        total = self.gauge.zero
        for (_, b), c in h.items():
            total = total + c * self.values[b - 1]

        return total

    def value(self, b):
        return self.values[b - 1]

    def __add__(self, other):
        return Weight(self.gauge, [x + y for x, y in zip(self.values, other.values)])

    def __sub__(self, other):
        return Weight(self.gauge, [x - y for x, y in zip(self.values, other.values)])

    def __neg__(self):
        return Weight(self.gauge, [-x for x in self.values])

    def __mul__(self, c):
        return Weight(self.gauge, [x * c for x in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.gauge.n == other.gauge.n and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def __str__(self):
        return '(' + ', '.join(str(v) for v in self.values) + ')'

    def __repr__(self):
        return f'Weight{self}'

    def tilde(self):
        g = self.gauge
        return Weight(g, [g.eps(b) / (1 - g.eps(b)) * v for b, v in enumerate(self.values, 1)])

    def tilde_prime(self):
        g = self.gauge
        return Weight(g, [-v / (1 - g.eps(b)) for b, v in enumerate(self.values, 1)])


def tilde_weights(weight):
    return weight.tilde(), weight.tilde_prime()


class FiniteModule:
    def __init__(self, gauge, name, dim, matrices):
        self.gauge = gauge
        self.name = name
        self.dim = dim
        self.matrices = matrices

    def __repr__(self):
        return f'FiniteModule({self.name}, dim={self.dim})'

    def rho(self, a, b):
        n = self.gauge.n
        return self.matrices[(a % n, b % n)]

    def action(self, x):
        g = self.gauge
        total = np.array([[g.zero] * self.dim for _ in range(self.dim)], dtype=object)

        for (a, b), c in x.items():
            total = total + self.rho(a, b) * c

        return total

    def cartan_matrices(self):
        return [self.rho(0, b) for b in range(1, self.gauge.n)]

    def representation_violations(self):
        """number of basis pairs where rho([x, y]) != [rho x, rho y]"""

        g = self.gauge
        bad = 0

        for p in g.basis:
            for q in g.basis:
                x, y = g.element(*p), g.element(*q)
                lhs = self.action(x.bracket(y))
                rx, ry = self.rho(*p), self.rho(*q)
                if not mat_equal(lhs, rx @ ry - ry @ rx):
                    bad += 1

        return bad

    @classmethod
    def trivial(cls, gauge):
        zero = np.array([[gauge.zero]], dtype=object)
        return cls(gauge, 'triv', 1, {k: zero for k in gauge.basis})

    @classmethod
    def defining(cls, gauge):
        return cls(gauge, 'def', gauge.n, {k: gauge.j(*k) for k in gauge.basis})

    @classmethod
    def dual(cls, gauge):
        return cls(gauge, 'dual', gauge.n, {k: -gauge.j(*k).T for k in gauge.basis})

    def tensor(self, other):
        g = self.gauge
        one_a = linalg.identity(self.dim, g.zero, g.one)
        one_b = linalg.identity(other.dim, g.zero, g.one)

        matrices = {}
        for k in g.basis:
            matrices[k] = kron(self.matrices[k], one_b) + kron(one_a, other.matrices[k])

        return FiniteModule(g, f'{self.name}*{other.name}', self.dim * other.dim, matrices)


def kron(a, b):
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.empty((ra * rb, ca * cb), dtype=object)

    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]

    return out


BUILTIN_MODULES = {
    'def': FiniteModule.defining,
    'dual': FiniteModule.dual,
    'triv': FiniteModule.trivial,
}


def parse_rep(gauge, expr):
    """'def', 'dual', 'triv' and tensor products of them such as 'def*dual'"""

    parts = [p.strip() for p in str(expr).split('*')]
    if not all(parts):
        raise InvalidModuleError(f'malformed representation expression: {expr!r}')

    modules = []
    for p in parts:
        if p not in BUILTIN_MODULES:
            raise InvalidModuleError(f'unknown representation {p!r} (expected one of {", ".join(BUILTIN_MODULES)})')
        modules.append(BUILTIN_MODULES[p](gauge))

    module = modules[0]
    for m in modules[1:]:
        module = module.tensor(m)

    return module


def tensor_all(modules):
    module = modules[0]
    for m in modules[1:]:
        module = module.tensor(m)
    return module


WeightSpace = namedtuple('WeightSpace', ('weight', 'multiplicity', 'basis', 'projector'))


def _integer_eigenvalues(mat):
    # coroots act on finite-dimensional modules with integer eigenvalues; kernels confirm them exactly
    approx = np.linalg.eigvals(np.array([[x.to_complex() for x in row] for row in mat], dtype=complex))
    return sorted({int(round(z.real)) for z in approx}, reverse=True)


def _joint_kernel(mats, values, g):
    ident = linalg.identity(mats[0].shape[0], g.zero, g.one)
    return linalg.kernel(np.vstack([m - ident * v for m, v in zip(mats, values)]), g.zero, g.one)


def _first_index(basis):
    return min(next(i for i, x in enumerate(v) if x) for v in basis)


def weight_decompose(module):
    """Split a module into simultaneous eigenspaces of the H_b, with exact projectors."""

    g = module.gauge
    hs = module.cartan_matrices()
    dim = module.dim

    for i, x in enumerate(hs):
        for y in hs[i + 1:]:
            if not mat_equal(x @ y, y @ x):
                raise InvalidModuleError(f'{module.name}: the twisted Cartan acts by non-commuting matrices')

    # E_ii - E_(i+1)(i+1) span the same Cartan as the H_b
    coroots = []
    for i in range(g.n - 1):
        mat = linalg.identity(g.n, g.zero, g.zero)
        mat[i, i], mat[i + 1, i + 1] = g.one, -g.one
        coroots.append(module.action(g.from_matrix(mat)))

    labels = [()]
    for i, h in enumerate(coroots):
        labels = [c + (v,) for c in labels for v in _integer_eigenvalues(h)
                  if _joint_kernel(coroots[:i + 1], c + (v,), g)]

    spaces = []
    for label in labels:
        basis = _joint_kernel(coroots, label, g)
        diag = [0]
        for v in label:
            diag.append(diag[-1] - v)
        spaces.append((Weight.from_diagonal(g, diag), basis))

    spaces.sort(key=lambda s: _first_index(s[1]))

    total = sum(len(b) for _, b in spaces)
    if total != dim:
        raise InvalidModuleError(f'{module.name}: weight spaces cover dimension {total} of {dim}; the Cartan action is not diagonalisable over Q(e)')

    cols = [v for _, basis in spaces for v in basis]
    p = np.array(cols, dtype=object).T
    p_inv = linalg.inverse(p, g.zero, g.one)

    out = []
    start = 0
    for weight, basis in spaces:
        e = np.array([[g.zero] * dim for _ in range(dim)], dtype=object)
        for k in range(start, start + len(basis)):
            e[k, k] = g.one
        out.append(WeightSpace(weight, len(basis), basis, p @ e @ p_inv))
        start += len(basis)

    return out
