"""
Equivariant rational sections f(t) = sum J_ab t^a g_ab(t^N) of sl_N on the
punctured line, their Laurent jets at the insertion sites, residues and the
affine 2-cocycle.

Every g_ab is kept in partial-fraction form in s = t^N, so the twisted
equivariance f(e t) = Ad(gamma) f(t) holds by construction.
"""

from util.errors import SectionError
from util.liealg import LieElement
from util.series import Series
from collections import namedtuple
from fractions import Fraction

Site = namedtuple('Site', ('kind', 'rank', 't'))


class Curve:
    """The line with marked points t_1 .. t_L (and the sites 0 and infinity)."""

    def __init__(self, gauge, points, pole_cap=6):
        self.gauge = gauge
        self.field = gauge.field
        self.n = gauge.n
        self.pole_cap = pole_cap

        self.points = [self.field.coerce(p) for p in points]
        self.orbit = [p ** self.n for p in self.points]

        errors = []
        for i, p in enumerate(self.points, 1):
            if p.is_zero():
                errors.append(f'point {i} is zero')
        for i in range(len(self.orbit)):
            for j in range(i + 1, len(self.orbit)):
                if self.orbit[i] == self.orbit[j] and not self.points[i].is_zero():
                    errors.append(f'points {i + 1} and {j + 1} lie in the same C_{self.n}-orbit')
        if errors:
            raise SectionError('; '.join(errors))

        self.zero = Site('zero', 0, None)
        self.marked = [Site('marked', i, p) for i, p in enumerate(self.points, 1)]
        self.infinity = Site('infinity', len(self.points) + 1, None)
        self.sites = [self.zero, *self.marked, self.infinity]

    def __repr__(self):
        return f'Curve(N={self.n}, points=[{", ".join(str(p) for p in self.points)}])'

    @property
    def size(self):
        return len(self.points)

    def site(self, rank):
        return self.sites[rank]

    def weight(self, site):
        # the cocycle picks up 1/N at the fixed points of t -> e t
        return 1 if site.kind == 'marked' else Fraction(1, self.n)


class PartialFraction:
    """g(s) = sum_k c_k s^k + sum_(i, n) c_in / (s - s_i)^n"""

    __slots__ = ('laurent', 'poles')

    def __init__(self, laurent=None, poles=None):
        self.laurent = {k: c for k, c in (laurent or {}).items() if c}
        self.poles = {k: c for k, c in (poles or {}).items() if c}

    def __bool__(self):
        return bool(self.laurent or self.poles)

    @property
    def key(self):
        return tuple(sorted(self.laurent.items())), tuple(sorted(self.poles.items()))

    def __add__(self, other):
        laurent, poles = dict(self.laurent), dict(self.poles)
        for k, c in other.laurent.items():
            laurent[k] = laurent.get(k, 0) + c
        for k, c in other.poles.items():
            poles[k] = poles.get(k, 0) + c
        return PartialFraction(laurent, poles)

    def scale(self, c):
        return PartialFraction({k: v * c for k, v in self.laurent.items()}, {k: v * c for k, v in self.poles.items()})

    def theta(self, a, n, orbit):
        # t d/dt on t^a g(t^N), divided by t^a: a g + N s g'
        laurent = {k: c * (a + n * k) for k, c in self.laurent.items()}
        poles = {}

        for (i, m), c in self.poles.items():
            poles[(i, m)] = poles.get((i, m), 0) + c * (a - m * n)
            poles[(i, m + 1)] = poles.get((i, m + 1), 0) - c * m * n * orbit[i - 1]

        return PartialFraction(laurent, poles)

    def series(self, s, target, orbit):
        total = Series({}, target)

        for k, c in self.laurent.items():
            total = total + s.power(k, target).scale(c)

        for (i, m), c in self.poles.items():
            shifted = s + Series({0: -orbit[i - 1]})
            total = total + shifted.power(-m, target).scale(c)

        return total.truncate(target)


class Section:
    def __init__(self, curve, comps=None, label=None):
        self.curve = curve
        self.comps = {}
        self.label = label
        self._jets = {}

        n = curve.n
        for (a, b), g in (comps or {}).items():
            key = (a % n, b % n)
            if key == (0, 0):
                raise SectionError('the (0, 0) component is not in sl_N')
            if key in self.comps:
                g = self.comps[key] + g
            if g:
                self.comps[key] = g
            else:
                self.comps.pop(key, None)

    def __repr__(self):
        return f'Section({self.label or "anonymous"}, components={sorted(self.comps)})'

    @property
    def key(self):
        return tuple(sorted((k, g.key) for k, g in self.comps.items()))

    def __eq__(self, other):
        return isinstance(other, Section) and self.curve is other.curve and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __bool__(self):
        return bool(self.comps)

    def _check(self, other):
        if other.curve is not self.curve:
            raise SectionError('sections live on different curves')

    def __add__(self, other):
        self._check(other)
        comps = dict(self.comps)
        for k, g in other.comps.items():
            comps[k] = comps[k] + g if k in comps else g
        return Section(self.curve, comps)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not c:
            return Section(self.curve)
        return Section(self.curve, {k: g.scale(c) for k, g in self.comps.items()}, self.label)

    __rmul__ = __mul__

    def t_d_dt(self):
        c = self.curve
        return Section(c, {(a, b): g.theta(a, c.n, c.orbit) for (a, b), g in self.comps.items()})

    def exponents(self):
        """t-exponents a + kN of the Laurent parts"""

        n = self.curve.n
        return [a + k * n for (a, _), g in self.comps.items() for k in g.laurent]

    def pole_order(self, site):
        if site.kind == 'marked':
            orders = [m for g in self.comps.values() for (i, m) in g.poles if i == site.rank]
        elif site.kind == 'zero':
            orders = [-p for p in self.exponents()]
        else:
            orders = self.exponents()

        return max([0] + orders)

    def value_at(self, site):
        """value at 0 or infinity, or None if the section has a pole there"""

        if site.kind == 'marked':
            raise SectionError('value_at is only defined at 0 and infinity')
        if self.pole_order(site):
            return None

        g = self.curve.gauge
        terms = {}

        for (a, b), pf in self.comps.items():
            if a == 0 and pf.laurent.get(0):
                terms[(a, b)] = terms.get((a, b), 0) + pf.laurent[0]
            if site.kind == 'zero':
                for (i, m), c in pf.poles.items():
                    if a == 0:
                        terms[(a, b)] = terms.get((a, b), 0) + c * (-self.curve.orbit[i - 1]) ** (-m)

        return LieElement(g, terms)


def trig_basis_element(curve, a, b, i, n=1):
    """J_ab t^a / (t^N - t_i^N), or the h-section when a = 0, hit with (t d/dt)^(n-1)"""

    N = curve.n
    a, b = a % N, b % N

    if (a, b) == (0, 0):
        raise SectionError('J_00 has no trigonometric basis section')
    if n < 1:
        raise SectionError(f'pole order must be at least 1, got {n}')
    if n > curve.pole_cap:
        raise SectionError(f'pole order {n} exceeds the configured cap {curve.pole_cap}')
    if not 1 <= i <= curve.size:
        raise SectionError(f'no marked point {i}')

    if a:
        section = Section(curve, {(a, b): PartialFraction(poles={(i, 1): 1})})
    else:
        section = h_section(curve, b, i)

    for _ in range(n - 1):
        section = section.t_d_dt()

    section.label = f'trig({a},{b};{i},{n})'
    return section


def h_section(curve, b, i):
    """(e^b t^N - t_i^N) / (t^N - t_i^N) J_0b: equal to J_0b at 0 and Ad(beta) J_0b at infinity"""

    N = curve.n
    if b % N == 0:
        raise SectionError('h_section needs b not divisible by N')
    if not 1 <= i <= curve.size:
        raise SectionError(f'no marked point {i}')

    eb = curve.field.eps(b)
    pf = PartialFraction({0: eb}, {(i, 1): (eb - 1) * curve.orbit[i - 1]})
    return Section(curve, {(0, b): pf}, f'h({b};{i})')


def orb_monomial(curve, a, b, m):
    """J_ab t^(a + mN)"""

    N = curve.n
    a, b = a % N, b % N

    if (a, b) == (0, 0):
        raise SectionError('J_00 is not in sl_N')
    if abs(a + m * N) > curve.pole_cap:
        raise SectionError(f'pole order {abs(a + m * N)} exceeds the configured cap {curve.pole_cap}')

    return Section(curve, {(a, b): PartialFraction({m: 1})}, f'mono({a},{b};{a + m * N})')


def t_power(curve, a, b, p):
    """J_ab t^p with p = a mod N"""

    if (p - a) % curve.n:
        raise SectionError(f'J_{a}{b} t^{p} is not equivariant: need p = a mod {curve.n}')
    return orb_monomial(curve, a, b, (p - a % curve.n) // curve.n)


def constant_section(curve, h):
    if not h.is_cartan():
        raise SectionError(f'{h} is not Ad(gamma)-invariant, so it is not a constant section')
    return Section(curve, {k: PartialFraction({0: c}) for k, c in h.items()}, 'const')


def check_membership(f, cls, sites=None):
    curve = f.curve
    sites = curve.sites if sites is None else sites
    ranks = {s.rank for s in sites}

    for g in f.comps.values():
        for i, _ in g.poles:
            if i not in ranks or not 1 <= i <= curve.size:
                return False

    for site in (curve.zero, curve.infinity):
        if f.pole_order(site) and site.rank not in ranks:
            return False

    if cls == 'orb':
        return True

    at_zero = f.value_at(curve.zero)
    at_inf = f.value_at(curve.infinity)
    if at_zero is None or at_inf is None:
        return False

    if cls == 'trig':
        return at_inf == at_zero.ad_beta()
    if cls == 'zero':
        return not at_zero and not at_inf

    raise ValueError(f'unknown section class: {cls}')


class LaurentJet:
    """sum A_n xi^n at one site, known for every n <= order"""

    __slots__ = ('site', 'coeffs', 'order')

    def __init__(self, site, coeffs, order):
        self.site = site
        self.order = order
        self.coeffs = {n: x for n, x in coeffs.items() if n <= order and x}

    def __repr__(self):
        return f'LaurentJet({self.site.kind}{self.site.rank}, {self.coeffs}, order={self.order})'

    def _check(self, other):
        if self.site != other.site:
            raise SectionError('jets at different sites')
        if self.order != other.order:
            raise SectionError(f'inconsistent truncation orders {self.order} and {other.order}')

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for n, x in other.coeffs.items():
            coeffs[n] = coeffs[n] + x if n in coeffs else x
        return LaurentJet(self.site, coeffs, self.order)

    def __neg__(self):
        return LaurentJet(self.site, {n: -x for n, x in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return LaurentJet(self.site, {n: x * c for n, x in self.coeffs.items()}, self.order)

    def __eq__(self, other):
        if not isinstance(other, LaurentJet):
            return NotImplemented
        return self.site == other.site and self.order == other.order and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def principal(self):
        return LaurentJet(self.site, {n: x for n, x in self.coeffs.items() if n < 0}, self.order)

    def regular(self):
        return LaurentJet(self.site, {n: x for n, x in self.coeffs.items() if n >= 0}, self.order)

    def is_positive(self):
        return all(n >= 0 for n in self.coeffs)

    def truncate(self, order):
        if order > self.order:
            raise SectionError(f'cannot extend a jet of order {self.order} to {order}')
        return LaurentJet(self.site, self.coeffs, order)


def _local_coordinate(site):
    if site.kind == 'zero':
        return Series({1: 1})
    if site.kind == 'infinity':
        return Series({-1: 1})
    return Series({0: site.t, 1: 1})


def expand_at(f, site, order):
    curve = f.curve

    if site.kind == 'marked' and site not in curve.marked:
        # an ad hoc regular point is fine, one sharing an orbit with a pole is not
        orbit = site.t ** curve.n
        if any(orbit == curve.orbit[i - 1] for g in f.comps.values() for i, _ in g.poles):
            raise SectionError(f'site t = {site.t} shares a C_{curve.n}-orbit with an undeclared pole')
    if order < -f.pole_order(site):
        raise SectionError(f'order {order} is below the pole order at {site.kind} {site.rank}')

    key = (site, order)
    if key in f._jets:
        return f._jets[key]

    gauge = curve.gauge
    t = _local_coordinate(site)
    s = t.power(curve.n)
    vt = t.valuation()
    target = order + 1

    coeffs = {}
    for (a, b), g in f.comps.items():
        series = g.series(s, target - a * vt, curve.orbit)
        comp = t.power(a).mul(series, target)

        for n, c in comp.coeffs.items():
            x = LieElement(gauge, {(a, b): c})
            coeffs[n] = coeffs[n] + x if n in coeffs else x

    jet = LaurentJet(site, coeffs, order)
    f._jets[key] = jet
    return jet


def residue_at(f, g, site):
    """Res of the 1-form (df | g) at site"""

    pf, pg = f.pole_order(site), g.pole_order(site)
    jf = expand_at(f, site, pg)
    jg = expand_at(g, site, pf)

    total = f.curve.field.zero
    for m, x in jf.coeffs.items():
        y = jg.coeffs.get(-m)
        if m and y:
            total = total + x.inner(y) * m

    return total


def cocycle_pair(f, g, sites=None, normalized=True):
    curve = f.curve
    sites = curve.sites if sites is None else sites
    total = curve.field.zero

    for site in sites:
        weight = curve.weight(site) if normalized else 1
        total = total + residue_at(f, g, site) * weight

    return total


def decompose_gD(curve, jets, order):
    """
    Split jets at the marked points into (s, p): s a trig section, p the
    jets with no negative modes left, with jets = germs of s + p up to order.
    """

    remaining = {}
    for jet in jets:
        if jet.site.kind != 'marked':
            raise SectionError('decompose_gD takes jets at marked points only')
        if jet.order != order:
            raise SectionError(f'inconsistent truncation orders {jet.order} and {order}')
        remaining[jet.site.rank] = jet

    for site in curve.marked:
        remaining.setdefault(site.rank, LaurentJet(site, {}, order))

    total = Section(curve)

    for site in curve.marked:
        while True:
            negative = [n for n in remaining[site.rank].coeffs if n < 0]
            if not negative:
                break

            n = min(negative)
            x = remaining[site.rank].coeffs[n]

            for (a, b), c in x.items():
                basis = trig_basis_element(curve, a, b, site.rank, -n)
                lead = expand_at(basis, site, n).coeffs[n].terms[(a, b)]
                piece = basis * (c / lead)
                total = total + piece

                for other in curve.marked:
                    remaining[other.rank] = remaining[other.rank] - expand_at(piece, other, order)

    total.label = 'decomposed'
    return total, [remaining[site.rank] for site in curve.marked]
