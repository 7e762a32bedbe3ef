"""
Invariant suites run by the properties command. Every suite returns a
SuiteResult; a suite passes when it records no violations.
"""

from util.coinvariants import WeylInsertion
from util.liealg import (FiniteModule, Weight, adjoint_trace_inner, mat_equal, mat_power, parse_rep, sl,
                         weight_decompose)
from util.linalg import identity, rank
from util.modules import Insertion, Mode, ModVector, VermaModule, WeylModule
from util.sections import (Curve, LaurentJet, check_membership, cocycle_pair, decompose_gD, expand_at, t_power,
                           trig_basis_element)
from collections import namedtuple
import numpy as np
import random

SuiteResult = namedtuple('SuiteResult', ('name', 'checks', 'violations', 'details'))


class Suite:
    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.violations = 0
        self.details = []

    def check(self, ok, detail):
        self.checks += 1
        if not ok:
            self.violations += 1
            if len(self.details) < 10:
                self.details.append(detail)

    def result(self):
        return SuiteResult(self.name, self.checks, self.violations, self.details)


def field_axioms(n, rng, count=20):
    g = sl(n)
    f = g.field
    suite = Suite('cyclofield')

    for _ in range(count):
        x, y, z = f.random(rng), f.random(rng), f.random(rng)
        suite.check((x * y) * z == x * (y * z), 'associativity')
        suite.check(x * (y + z) == x * y + x * z, 'distributivity')
        suite.check(x * y == y * x, 'commutativity')
        if x:
            suite.check(x * x.inverse() == 1, f'inverse of {x}')

    total = f.zero
    for a in range(n):
        suite.check(f.eps(a) * f.eps(n - a) == 1, f'e^{a} e^{n - a}')
        total = total + f.eps(a)
    suite.check(total == 0, 'roots of unity sum to zero')
    suite.check(f.eps(1) ** n == 1, 'e has order N')

    return suite.result()


def lie_structure(n, rng, count=10):
    g = sl(n)
    suite = Suite('liealg')
    one = identity(n, g.zero, g.one)

    suite.check(mat_equal(mat_power(g.beta, n), one) and mat_equal(mat_power(g.gamma, n), one), 'beta^N = gamma^N = 1')
    suite.check(mat_equal(g.gamma @ g.beta, g.beta @ g.gamma * g.eps(1)), 'gamma beta = e beta gamma')

    flat = np.array([list(g.j(a, b).flat) for a, b in g.basis], dtype=object)
    suite.check(rank(flat) == n * n - 1, 'J_ab are linearly independent')

    for p in g.basis:
        jp = g.j(*p)
        x = g.element(*p)
        suite.check(mat_equal(x.ad_gamma().to_matrix(), g.gamma @ jp @ mat_power(g.gamma, -1)), f'Ad gamma J{p}')
        suite.check(mat_equal(x.ad_beta().to_matrix(), g.beta @ jp @ mat_power(g.beta, -1)), f'Ad beta J{p}')

        for q in g.basis:
            y = g.element(*q)
            jq = g.j(*q)
            suite.check(mat_equal(x.bracket(y).to_matrix(), jp @ jq - jq @ jp), f'bracket J{p} J{q}')
            suite.check(x.inner(y) == adjoint_trace_inner(x, y), f'trace forms J{p} J{q}')

    for _ in range(count):
        x, y, z = (g.random_element(rng) for _ in range(3))
        jac = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
        suite.check(not jac, 'Jacobi identity')

    for name in ('def', 'dual'):
        module = getattr(FiniteModule, {'def': 'defining', 'dual': 'dual'}[name])(g)
        suite.check(module.representation_violations() == 0, f'{name} is a representation')

    return suite.result()


def twisted_weights(n, rng, count=10):
    g = sl(n)
    suite = Suite('weights')

    for _ in range(count):
        lam = Weight(g, [g.field.random(rng, 3) for _ in range(n - 1)])
        t, tp = lam.tilde(), lam.tilde_prime()
        suite.check(t + tp == -lam, 'tilde + tilde prime = -lambda')
        suite.check(Weight.from_diagonal(g, lam.to_diagonal()) == lam, 'diagonal coordinates')
        if n == 2:
            suite.check(t == Weight(g, [-lam.values[0] / 2]), 'N = 2: tilde = -lambda / 2')

    return suite.result()


def cocycle_vanishing(curve, max_order=3):
    g = curve.gauge
    suite = Suite('cocycle')
    marked = curve.marked

    trig = [trig_basis_element(curve, a, b, site.rank, j) for site in marked for a, b in g.basis
            for j in range(1, max_order + 1)]
    for f in trig:
        suite.check(check_membership(f, 'trig'), f'{f.label} is a trig section')

    for f in trig:
        for h in trig:
            suite.check(cocycle_pair(f, h, marked) == 0, f'trig pair {f.label}, {h.label}')

    mono = [t_power(curve, a, b, p) for a, b in g.basis for p in range(-max_order, max_order + 1)
            if p and (p - a) % g.n == 0]
    orb = [trig_basis_element(curve, a, b, site.rank, 1) for site in marked for a, b in g.basis] + mono

    for f in orb:
        for h in orb:
            value = cocycle_pair(f, h)
            suite.check(value == 0, f'orb pair {f.label}, {h.label}')
            suite.check(value + cocycle_pair(h, f) == 0, f'antisymmetry {f.label}, {h.label}')

    # without the 1/N at 0 and infinity some pair must fail
    broken = any(cocycle_pair(f, h, normalized=False) != 0 for f in orb for h in orb)
    suite.check(broken, 'dropping the 1/N weight breaks vanishing')

    return suite.result()


def random_jets(curve, rng, depth=3):
    g = curve.gauge
    jets = []

    for site in curve.marked:
        coeffs = {}
        for n in range(-rng.randint(0, depth), depth + 1):
            if rng.random() < 0.6:
                coeffs[n] = g.random_element(rng, 2)
        jets.append(LaurentJet(site, coeffs, depth))

    return jets


def decomposition(curve, rng, count=20, depth=3):
    suite = Suite('decomposition')

    for _ in range(count):
        jets = random_jets(curve, rng, depth)
        s, p = decompose_gD(curve, jets, depth)

        suite.check(check_membership(s, 'trig', curve.marked), 'decomposed part is a trig section')
        suite.check(all(x.is_positive() for x in p), 'remainder has no negative modes')

        for jet, rest in zip(jets, p):
            suite.check(expand_at(s, jet.site, depth) + rest == jet, 'round trip')

        again, _ = decompose_gD(curve, p, depth)
        suite.check(not again, 'positive jets have no trig part')

    return suite.result()


def random_modes(engine, rng, rank, count, lo=-2, hi=2):
    kind = engine.curve.site(rank).kind
    n = engine.gauge.n
    out = []

    while len(out) < count:
        a, b = rng.choice(engine.gauge.basis)
        k = rng.randint(lo, hi)
        if kind == 'zero' and (k - a) % n:
            continue
        if kind == 'infinity' and (k + a) % n:
            continue
        out.append(Mode(k, rank, a, b))

    return out


def bracket_jacobi(engine, rng, count=10):
    suite = Suite('extended bracket')

    for rank in engine.ranks:
        for _ in range(count):
            x, y, z = ({m: 1} for m in random_modes(engine, rng, rank, 3))
            total, central = {}, 0

            for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                inner, _ = engine.bracket_elements(q, r)
                outer, c = engine.bracket_elements(p, inner)
                central = central + c
                for m, v in outer.items():
                    total[m] = total.get(m, 0) + v

            suite.check(not any(total.values()) and central == 0, f'Jacobi at site {rank}')

        for _ in range(count):
            m1, m2 = random_modes(engine, rng, rank, 2)
            x, y = {m1: 1}, {m2: 1}
            lie, c = engine.bracket_elements(x, y)
            lie2, c2 = engine.bracket_elements(y, x)
            suite.check(all(lie.get(m, 0) == -lie2.get(m, 0) for m in set(lie) | set(lie2)) and c == -c2,
                        f'antisymmetry at site {rank}')

    return suite.result()


def smoothness(engine, rng, count=10, depth=3):
    suite = Suite('smoothness')
    keys = engine.keys(depth)

    for key in rng.sample(keys, min(count, len(keys))):
        for rank in engine.ranks:
            bound = engine.site_depth(key, rank) + 1
            for mode in random_modes(engine, rng, rank, 3, bound, bound + engine.gauge.n):
                suite.check(not engine.act(mode, key), f'{mode} kills {key}')

    return suite.result()


def rho_scalar(curve, weyl_modules, level, rng):
    g = curve.gauge
    suite = Suite('rho_1_beta')
    weyl = WeylInsertion(curve, weyl_modules, level)
    weights = [ws.weight for ws in weight_decompose(weyl.total)]

    for lam in weights:
        for mu in weights:
            engine = weyl.orb_engine(lam.tilde(), mu.tilde_prime())
            for b in range(1, g.n):
                scalar = g.eps(b) * (lam - mu).value(b) / (1 - g.eps(b))
                for key in rng.sample(engine.keys(1), min(4, len(engine.keys(1)))):
                    vec = ModVector({key: g.one})
                    got = engine.rho_1_beta(vec, g.h(b))
                    suite.check(got == vec * scalar, f'rho scalar on {key}')
                    if lam == mu:
                        suite.check(not got, 'matched weights give zero')

    return suite.result()


def pbw_counts(n, depth=4):
    """normal monomials at 0 by depth against prod_d (1 - q^d)^(-c_d)"""

    g = sl(n)
    suite = Suite('pbw count')
    curve = Curve(g, [1])
    engine = Insertion(curve, {0: VermaModule('zero', Weight.zero(g), 1)}, 1, max_depth=depth)

    expected = [1] + [0] * depth
    for d in range(1, depth + 1):
        c = sum(1 for a, b in g.basis if (a + d) % n == 0)
        for _ in range(c):
            for k in range(d, depth + 1):
                expected[k] += expected[k - d]

    suite.check(engine.count_by_depth(depth) == expected, f'counts {engine.count_by_depth(depth)} vs {expected}')
    return suite.result()


def run_suites(n, points, reps, level, seed=0, rng=None):
    rng = rng or random.Random(seed)
    g = sl(n)
    curve = Curve(g, points)
    modules = [parse_rep(g, r) for r in reps]

    weyl_slots = {site.rank: WeylModule(m, level) for site, m in zip(curve.marked, modules)}
    slots = dict(weyl_slots)
    slots[curve.zero.rank] = VermaModule('zero', Weight.zero(g), level)
    slots[curve.infinity.rank] = VermaModule('infinity', Weight.zero(g), level)

    bracket_engine = Insertion(curve, slots, level)
    raw_engine = Insertion(curve, slots, level, smooth_cutoff=False)

    return [
        field_axioms(n, rng),
        lie_structure(n, rng),
        twisted_weights(n, rng),
        cocycle_vanishing(curve),
        decomposition(curve, rng),
        bracket_jacobi(bracket_engine, rng),
        smoothness(raw_engine, rng, depth=2),
        rho_scalar(curve, modules, level, rng),
        pbw_counts(n),
    ]
