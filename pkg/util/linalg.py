"""
Exact linear algebra over Q and Q(e).

Sparse vectors are dicts key -> scalar with zero entries dropped; dense
matrices are numpy object arrays holding Fractions or CycNums.
"""

from fractions import Fraction
import numpy as np


def _exact(c):
    return Fraction(c) if isinstance(c, int) else c


def vec_add(u, v, c=1):
    """u + c*v, returned as a fresh dict"""

    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(v, c):
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def vec_clean(v):
    return {k: x for k, x in v.items() if x}


class RowReducer:
    """Incremental echelon form; each stored row is normalised at its smallest key."""

    def __init__(self, key=None):
        self.key = key
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        vec = vec_clean(vec)

        while True:
            hits = [k for k in vec if k in self.rows]
            if not hits:
                return vec

            col = min(hits, key=self.key)
            vec = vec_add(vec, self.rows[col], -vec[col])

    def add(self, vec):
        vec = self.reduce(vec)
        if not vec:
            return False

        col = min(vec, key=self.key)
        self.rows[col] = vec_scale(vec, 1 / _exact(vec[col]))
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def copy(self):
        other = RowReducer(self.key)
        other.rows = dict(self.rows)
        return other


def rref(mat):
    """Reduced row echelon form of a dense object matrix; returns (matrix, pivot columns)."""

    m = np.array(mat, dtype=object)
    rows, cols = m.shape
    pivots = []
    r = 0

    for c in range(cols):
        if r == rows:
            break

        p = next((i for i in range(r, rows) if m[i, c]), None)
        if p is None:
            continue

        m[[r, p]] = m[[p, r]]
        m[r] = m[r] * (1 / _exact(m[r, c]))

        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = m[i] - m[i, c] * m[r]

        pivots.append(c)
        r += 1

    return m, pivots


def rank(mat):
    if np.size(mat) == 0:
        return 0
    return len(rref(mat)[1])


def kernel(mat, zero=0, one=1):
    """Basis of the right kernel, as a list of object vectors."""

    m, pivots = rref(mat)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []

    for f in free:
        v = np.array([zero] * cols, dtype=object)
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -m[i, f]
        basis.append(v)

    return basis


def inverse(mat, zero=0, one=1):
    m = np.array(mat, dtype=object)
    n = m.shape[0]
    ident = np.array([[one if i == j else zero for j in range(n)] for i in range(n)], dtype=object)

    red, pivots = rref(np.hstack([m, ident]))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError('matrix is singular')

    return red[:, n:]


def identity(n, zero=0, one=1):
    return np.array([[one if i == j else zero for j in range(n)] for i in range(n)], dtype=object)
