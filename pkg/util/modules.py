"""
Modules at the insertion sites and the PBW engine that lets local modes act
on them.

A monomial is a pair (modes, gen): modes is a tuple of strictly negative
Modes in normal order, gen holds one basis index per module slot. A
ModVector is a finite combination of monomials.
"""

from util.errors import DepthOverflow, FuelExhausted, InvalidModuleError, SectionError
from util.liealg import LieElement
from util.sections import check_membership, expand_at
from collections import namedtuple
from fractions import Fraction
import itertools

Mode = namedtuple('Mode', ('n', 'site', 'a', 'b'))  # J_ab xi^n at the site of that rank


class ModVector(dict):
    """{(modes, gen): coefficient} with zero coefficients dropped"""

    def __init__(self, terms=None):
        super().__init__()
        for k, c in (terms or {}).items():
            self.add_term(k, c)

    def add_term(self, key, c):
        if not c:
            return
        c = self.get(key, 0) + c
        if c:
            self[key] = c
        else:
            self.pop(key, None)

    def __add__(self, other):
        out = ModVector(self)
        for k, c in other.items():
            out.add_term(k, c)
        return out

    def __neg__(self):
        return ModVector({k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return ModVector({k: v * c for k, v in self.items()})

    __rmul__ = __mul__

    def depth(self):
        return max((-sum(m.n for m in modes) for modes, _ in self), default=0)


class WeylModule:
    """Induced from a finite module V: xi^0 acts through V, xi^(>0) by zero"""

    kind = 'weyl'

    def __init__(self, module, level):
        self.module = module
        self.level = Fraction(level)
        self.dim = module.dim

    def __repr__(self):
        return f'WeylModule({self.module.name}, k={self.level})'

    def act_zero(self, a, b, gen):
        col = self.module.rho(a, b)[:, gen]
        return [(r, c) for r, c in enumerate(col) if c]


class VermaModule:
    """Twisted Verma module at 0 or infinity: n_+ kills 1, H acts on it by the weight"""

    kind = 'verma'
    dim = 1

    def __init__(self, site_kind, weight, level):
        if site_kind not in ('zero', 'infinity'):
            raise InvalidModuleError(f'Verma modules live at 0 or infinity, not at {site_kind}')

        self.site_kind = site_kind
        self.weight = weight
        self.level = Fraction(level)

    def __repr__(self):
        return f'VermaModule({self.site_kind}, {self.weight}, k={self.level})'

    def act_zero(self, a, b, gen):
        if a:
            raise SectionError(f'J_{a}{b} has no zero mode at {self.site_kind}')
        return [(0, self.weight.value(b))]


class UniversalVermaQuot:
    """Finite quotient of the universal Verma module: one Verma component per weight"""

    def __init__(self, site_kind, weights, level, primed=False):
        self.site_kind = site_kind
        self.weights = list(weights)
        self.level = Fraction(level)
        self.primed = primed
        self.twisted = [w.tilde_prime() if primed else w.tilde() for w in self.weights]

        if len(set(self.twisted)) != len(self.twisted):
            raise InvalidModuleError('twisted weights of the universal Verma quotient are not distinct')

    def __len__(self):
        return len(self.weights)

    def components(self):
        return [VermaModule(self.site_kind, w, self.level) for w in self.twisted]

    def right_eigenvalues(self):
        return list(self.twisted)


def admissible_modes(gauge, kind, rank, depth):
    """negative modes at one site down to the given depth"""

    n = gauge.n
    out = []

    for d in range(1, depth + 1):
        for a, b in gauge.basis:
            if kind == 'zero' and (a + d) % n:
                continue
            if kind == 'infinity' and (a - d) % n:
                continue
            out.append(Mode(-d, rank, a, b))

    return out


class Insertion:
    """
    Tensor product of modules placed at sites of a curve, with the
    centrally extended local algebra acting on PBW monomials.
    """

    def __init__(self, curve, slots, level, max_depth=6, fuel=None, order='depth', smooth_cutoff=True):
        self.curve = curve
        self.gauge = curve.gauge
        self.field = curve.field
        self.level = Fraction(level)
        self.max_depth = max_depth
        self.fuel = fuel
        self.order = order
        self.smooth_cutoff = smooth_cutoff

        if order not in ('depth', 'site'):
            raise ValueError(f'unknown PBW order: {order}')

        self.slots = dict(slots)
        self.ranks = sorted(self.slots)
        self.pos = {rank: i for i, rank in enumerate(self.ranks)}

        for rank, module in self.slots.items():
            site = curve.site(rank)
            if module.kind == 'verma' and module.site_kind != site.kind:
                raise InvalidModuleError(f'a Verma module for {module.site_kind} cannot sit at {site.kind}')
            if module.kind == 'weyl' and site.kind != 'marked':
                raise InvalidModuleError('Weyl modules sit at marked points')

        self.steps = 0
        self._cache = {}

    def __repr__(self):
        return f'Insertion({self.curve}, slots={self.slots})'

    # ordering and bookkeeping

    def sort_key(self, mode):
        if self.order == 'site':
            return (mode.site, mode.n, mode.a, mode.b)
        return mode

    def normal(self, modes):
        return tuple(sorted(modes, key=self.sort_key))

    def depth(self, key):
        return -sum(m.n for m in key[0])

    def site_depth(self, key, rank):
        return -sum(m.n for m in key[0] if m.site == rank)

    def check_mode(self, mode):
        if mode.site not in self.slots:
            raise SectionError(f'no module at site rank {mode.site}')

        kind = self.curve.site(mode.site).kind
        n = self.gauge.n
        if kind == 'zero' and (mode.n - mode.a) % n:
            raise SectionError(f'J_{mode.a}{mode.b} t^{mode.n} violates the twisted mode constraint at 0')
        if kind == 'infinity' and (mode.n + mode.a) % n:
            raise SectionError(f'J_{mode.a}{mode.b} u^{mode.n} violates the twisted mode constraint at infinity')

    def generators(self):
        return list(itertools.product(*(range(self.slots[r].dim) for r in self.ranks)))

    def vacuum(self, gen):
        return ModVector({((), tuple(gen)): self.field.one})

    def modes(self, depth):
        out = []
        for rank in self.ranks:
            out += admissible_modes(self.gauge, self.curve.site(rank).kind, rank, depth)
        return sorted(out, key=self.sort_key)

    def monomials(self, depth):
        """normal-ordered mode tuples of total depth at most depth"""

        available = self.modes(depth)
        out = []

        def grow(prefix, start, left):
            out.append(tuple(prefix))
            for i in range(start, len(available)):
                m = available[i]
                if -m.n <= left:
                    grow(prefix + [m], i, left + m.n)

        grow([], 0, depth)
        return out

    def keys(self, depth):
        gens = self.generators()
        return [(m, g) for m in self.monomials(depth) for g in gens]

    def count_by_depth(self, depth):
        counts = [0] * (depth + 1)
        for m in self.monomials(depth):
            counts[-sum(x.n for x in m)] += 1
        return counts

    # the local algebra

    def bracket(self, x, y):
        """[x, y] for two modes at one site: (Mode or None, coefficient, central scalar)"""

        g = self.gauge
        n = g.n
        lie, coef = None, g.bracket_coefficient(x.a, x.b, y.a, y.b)
        a, b = (x.a + y.a) % n, (x.b + y.b) % n

        if coef and (a, b) != (0, 0):
            lie = Mode(x.n + y.n, x.site, a, b)

        central = 0
        if x.n + y.n == 0 and (a, b) == (0, 0):
            # m tr(J_ab J_cd) k, weighted by 1/N at 0 and infinity
            weight = self.curve.weight(self.curve.site(x.site))
            central = g.eps(-x.b * y.a) * (x.n * n * weight * self.level)

        return lie, coef, central

    def bracket_elements(self, x, y):
        """bracket of two combinations {Mode: c} of modes (at one site each), with central part"""

        out, central = {}, 0

        for m1, c1 in x.items():
            for m2, c2 in y.items():
                if m1.site != m2.site:
                    continue
                lie, coef, z = self.bracket(m1, m2)
                if lie is not None:
                    out[lie] = out.get(lie, 0) + coef * c1 * c2
                if z:
                    central = central + z * c1 * c2

        return {m: c for m, c in out.items() if c}, central

    def _burn(self):
        self.steps += 1
        if self.fuel is not None and self.steps > self.fuel:
            raise FuelExhausted(f'rewriting fuel of {self.fuel} steps exhausted', self.steps)

    def act(self, y, key):
        hit = self._cache.get((y, key))
        if hit is not None:
            return hit

        self._burn()
        modes, gen = key
        out = ModVector()

        if y.n < 0 and (not modes or self.sort_key(y) <= self.sort_key(modes[0])):
            if self.depth(key) - y.n > self.max_depth:
                raise DepthOverflow(f'monomial depth {self.depth(key) - y.n} exceeds the cap {self.max_depth}', self.steps)
            out.add_term(((y,) + modes, gen), self.field.one)

        elif self.smooth_cutoff and y.n > self.site_depth(key, y.site):
            pass

        elif y.n == 0 and not self.site_depth(key, y.site):
            # commutes with every stored mode, acts on the generator slot
            i = self.pos[y.site]
            for r, c in self.slots[y.site].act_zero(y.a, y.b, gen[i]):
                out.add_term((modes, gen[:i] + (r,) + gen[i + 1:]), c)

        elif not modes:
            pass  # a positive mode kills the generator

        else:
            # y head rest = head (y rest) + [y, head] rest
            head, rest = modes[0], (modes[1:], gen)

            for k, c in self.act(y, rest).items():
                for k2, c2 in self.act(head, k).items():
                    out.add_term(k2, c * c2)

            if y.site == head.site:
                lie, coef, central = self.bracket(y, head)
                if lie is not None:
                    for k, c in self.act(lie, rest).items():
                        out.add_term(k, coef * c)
                if central:
                    out.add_term(rest, central)

        self._cache[(y, key)] = out
        return out

    def apply(self, mode, vec):
        self.check_mode(mode)
        out = ModVector()

        for key, c in vec.items():
            for k, c2 in self.act(mode, key).items():
                out.add_term(k, c * c2)

        return out

    def apply_lie(self, x, n, rank, vec):
        """(x (x) xi^n) at the site of rank acting on vec"""

        out = ModVector()
        for (a, b), c in x.items():
            out = out + self.apply(Mode(n, rank, a, b), vec) * c
        return out

    def act_local(self, mode, vec):
        return self.apply(mode, vec)

    def act_jets(self, jets, key):
        """a family of jets (one per slot) acting on a single monomial"""

        out = ModVector()

        for jet in jets:
            rank = jet.site.rank
            for n, x in jet.coeffs.items():
                for (a, b), c in x.items():
                    for k, c2 in self.act(Mode(n, rank, a, b), key).items():
                        out.add_term(k, c * c2)

        return out

    def section_on_key(self, f, key):
        # modes beyond the site depth of key kill it, so that is where the jets stop
        jets = [expand_at(f, self.curve.site(rank), self.site_depth(key, rank)) for rank in self.ranks]
        return self.act_jets(jets, key)

    def act_section(self, f, vec, cls='orb'):
        sites = [self.curve.site(r) for r in self.ranks]
        if cls is not None and not check_membership(f, cls, sites):
            raise SectionError(f'{f} is not a member of the {cls} class of global sections')

        out = ModVector()
        for key, c in vec.items():
            out = out + self.section_on_key(f, key) * c

        return out

    # the right action of h on Verma slots

    def right_h(self, vec, rank, h):
        """
        [x H] for x a PBW word in the Verma slot at rank, computed as
        H x minus the commutators [H, X_j]; this equals the highest weight
        of the slot evaluated on H, times x.
        """

        if self.slots[rank].kind != 'verma':
            raise InvalidModuleError('the right h-action lives on Verma slots')

        out = self.apply_lie(h, 0, rank, vec)

        for (modes, gen), c in vec.items():
            for j, mode in enumerate(modes):
                if mode.site != rank:
                    continue

                corr = h.bracket(LieElement(self.gauge, {(mode.a, mode.b): 1}))
                word = ModVector({((), gen): c})

                for idx in range(len(modes) - 1, -1, -1):
                    if idx == j:
                        word = self.apply_lie(corr, mode.n, rank, word)
                    else:
                        word = self.apply(modes[idx], word)

                out = out - word

        return out

    def rho_1_beta(self, vec, h):
        zero, inf = self.curve.zero.rank, self.curve.infinity.rank
        return self.right_h(vec, zero, h) + self.right_h(vec, inf, h.ad_beta())
