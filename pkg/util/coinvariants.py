"""
Conformal coinvariants by constructive reduction.

Each negative mode X of a monomial is traded for a global section whose
principal part is exactly X; what is left acts by non-negative modes and
lowers the depth. Repeating this lands in the generating slice (V, or
1 (x) V (x) 1), where the remaining relations are eliminated exactly.
"""

from util.errors import FactorlabError, InvalidModuleError
from util.liealg import LieElement, tensor_all, weight_decompose, Weight
from util.linalg import RowReducer
from util.modules import Insertion, ModVector, UniversalVermaQuot, VermaModule, WeylModule
from util.sections import (LaurentJet, constant_section, decompose_gD, t_power, trig_basis_element)
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
import functools
import hashlib
import logging
import json

logger = logging.getLogger(__name__)

ReductionStep = namedtuple('ReductionStep', ('section', 'site', 'before', 'after'))
CCResult = namedtuple('CCResult', ('dim', 'basis', 'window', 'certified', 'relations', 'fuel', 'digest'))
ComponentResult = namedtuple('ComponentResult', ('lam', 'mu', 'raw_dim', 'dim', 'certified', 'relations', 'fuel', 'digest'))
ComponentEntry = namedtuple('ComponentEntry', ('weight', 'dim', 'multiplicity', 'raw_dim', 'certified', 'fuel', 'digest'))


class WeylInsertion:
    """M(V): Weyl modules induced from V_1 .. V_L at the marked points of a curve"""

    def __init__(self, curve, modules, level):
        if len(modules) != curve.size:
            raise InvalidModuleError(f'{len(modules)} modules for {curve.size} marked points')

        self.curve = curve
        self.gauge = curve.gauge
        self.level = level
        self.modules = list(modules)
        self.weyl = [WeylModule(m, level) for m in self.modules]
        self.total = tensor_all(self.modules)

    def __repr__(self):
        return f'WeylInsertion({self.curve}, [{", ".join(m.name for m in self.modules)}], k={self.level})'

    @property
    def dim(self):
        return self.total.dim

    def trig_engine(self, max_depth=6, fuel=None, order='depth'):
        slots = {site.rank: w for site, w in zip(self.curve.marked, self.weyl)}
        return Insertion(self.curve, slots, self.level, max_depth, fuel, order)

    def orb_engine(self, zero_weight, inf_weight, max_depth=6, fuel=None, order='depth'):
        """engine on M_zero (x) M(V) (x) M_inf, with the (already twisted) highest weights given"""

        slots = {site.rank: w for site, w in zip(self.curve.marked, self.weyl)}
        slots[self.curve.zero.rank] = VermaModule('zero', zero_weight, self.level)
        slots[self.curve.infinity.rank] = VermaModule('infinity', inf_weight, self.level)
        return Insertion(self.curve, slots, self.level, max_depth, fuel, order)


class ReductionTrace:
    def __init__(self, vector):
        self.input = vector
        self.steps = []
        self.output = None
        self.fuel = 0

    def __repr__(self):
        return f'ReductionTrace({len(self.steps)} steps, fuel={self.fuel})'

    def is_decreasing(self):
        return all(s.after < s.before for s in self.steps)

    def digest(self):
        return trace_digest(self.steps)


def trace_digest(steps):
    payload = json.dumps([list(s) for s in steps], sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


class Reducer:
    def __init__(self, engine):
        self.engine = engine
        self.curve = engine.curve
        self.gauge = engine.gauge
        self.steps = []

        self._memo = {}
        self._principal = {}

    def principal_section(self, mode):
        """a global section whose only principal part at the module sites is mode"""

        s = self._principal.get(mode)
        if s is not None:
            return s

        site = self.curve.site(mode.site)

        if site.kind == 'marked':
            jet = LaurentJet(site, {mode.n: LieElement(self.gauge, {(mode.a, mode.b): 1})}, 0)
            s, _ = decompose_gD(self.curve, [jet], 0)
        elif site.kind == 'zero':
            s = t_power(self.curve, mode.a, mode.b, mode.n)
        else:
            s = t_power(self.curve, mode.a, mode.b, -mode.n)

        self._principal[mode] = s
        return s

    def reduce_key(self, key, trace=None):
        """{gen: coefficient} in the generating slice congruent to the monomial key"""

        hit = self._memo.get(key)
        if hit is not None:
            return hit

        modes, gen = key
        out = {}

        if not modes:
            out[gen] = self.engine.field.one
        else:
            x, rest = modes[0], (modes[1:], gen)
            s = self.principal_section(x)

            r = self.engine.section_on_key(s, rest)
            lead = r.pop(key, None)
            if lead != 1:
                raise FactorlabError(f'principal section for {x} does not reproduce the monomial (got {lead})')

            before, after = self.engine.depth(key), r.depth()
            if r and after >= before:
                raise FactorlabError(f'reduction of {x} did not lower the depth ({before} -> {after})')

            step = ReductionStep(s.label, x.site, before, after)
            self.steps.append(step)
            if trace is not None:
                trace.steps.append(step)

            for k, c in r.items():
                for g, c2 in self.reduce_key(k, trace).items():
                    v = out.get(g, 0) - c * c2
                    if v:
                        out[g] = v
                    else:
                        out.pop(g, None)

        self._memo[key] = out
        return out

    def reduce(self, vec, trace=None):
        out = {}

        for key, c in vec.items():
            for g, c2 in self.reduce_key(key, trace).items():
                v = out.get(g, 0) + c * c2
                if v:
                    out[g] = v
                else:
                    out.pop(g, None)

        return out


def reduce_trig(weyl, vec, max_depth=6, fuel=None, engine=None):
    engine = engine or weyl.trig_engine(max_depth, fuel)
    trace = ReductionTrace(vec)
    out = Reducer(engine).reduce(vec, trace)

    trace.output = out
    trace.fuel = engine.steps
    return out, trace


def reduce_orb(weyl, lam, mu, vec, max_depth=6, fuel=None, engine=None):
    """lam, mu are the twisted highest weights at 0 and infinity"""

    engine = engine or weyl.orb_engine(lam, mu, max_depth, fuel)
    trace = ReductionTrace(vec)
    out = Reducer(engine).reduce(vec, trace)

    trace.output = out
    trace.fuel = engine.steps
    return out, trace


def trig_relations(engine, window):
    curve = engine.curve

    for site in curve.marked:
        if site.rank not in engine.slots:
            continue
        for a, b in engine.gauge.basis:
            for j in range(1, window + 1):
                f = trig_basis_element(curve, a, b, site.rank, j)
                for key in engine.keys(window - j):
                    yield f.label, engine.section_on_key(f, key)


def orb_relations(engine, window):
    """trig sections, monomials with poles at 0 or infinity, and the non-constant part of the span"""

    curve = engine.curve
    yield from trig_relations(engine, window)

    for a, b in engine.gauge.basis:
        for p in range(-window, window + 1):
            if p == 0 or (p - a) % engine.gauge.n:
                continue
            f = t_power(curve, a, b, p)
            for key in engine.keys(window - abs(p)):
                yield f.label, engine.section_on_key(f, key)

    for _, b in engine.gauge.cartan:
        f = constant_section(curve, engine.gauge.h(b))
        for key in engine.keys(window):
            if key[0]:
                yield f.label, engine.section_on_key(f, key)


def cc_trig(weyl, window=3, max_depth=6, fuel=None, order='depth'):
    engine = weyl.trig_engine(max_depth, fuel, order)
    reducer = Reducer(engine)
    span = RowReducer()
    count = 0

    for _, rel in trig_relations(engine, window):
        span.add(reducer.reduce(rel))
        count += 1

    gens = engine.generators()
    basis = [g for g in gens if g not in span.rows]
    logger.debug(f'cc_trig: {count} relations at window {window}, rank {span.rank}, {engine.steps} steps')

    return CCResult(len(gens) - span.rank, basis, window, span.rank == 0, count, engine.steps, trace_digest(reducer.steps))


def _cc_orb(weyl, lam, mu, window, max_depth, fuel, order, quotient=True):
    g = weyl.gauge
    engine = weyl.orb_engine(lam, mu, max_depth, fuel, order)
    reducer = Reducer(engine)

    # H_b acting on 1 (x) v (x) 1 through the zero modes at every site
    residual = RowReducer()
    for gen in engine.generators():
        for _, b in g.cartan:
            f = constant_section(weyl.curve, g.h(b))
            residual.add(reducer.reduce(engine.section_on_key(f, ((), gen))))

    span = residual.copy()
    certified = True
    count = 0

    for _, rel in orb_relations(engine, window):
        vec = reducer.reduce(rel)
        if not residual.contains(vec):
            certified = False
        span.add(vec)
        count += 1

    n_gens = len(engine.generators())
    raw_dim = n_gens - span.rank

    if quotient:
        for key in engine.keys(window):
            for _, b in g.cartan:
                vec = engine.rho_1_beta(ModVector({key: g.field.one}), g.h(b))
                span.add(reducer.reduce(vec))

    dim = n_gens - span.rank
    logger.debug(f'cc_orb {lam} | {mu}: raw {raw_dim}, quotient {dim}, {count} relations, {engine.steps} steps')
    return raw_dim, dim, certified, count, engine.steps, trace_digest(reducer.steps)


def cc_orb_component(lam, weyl, mu, window=3, max_depth=6, fuel=None, order='depth'):
    """
    Orbifold coinvariants of M_lam~ (x) M(V) (x) M_mu~' modulo the right
    h-action; also reports the dimension before that quotient.
    """

    raw_dim, dim, certified, count, steps, digest = _cc_orb(weyl, lam.tilde(), mu.tilde_prime(), window, max_depth, fuel, order)
    return ComponentResult(lam, mu, raw_dim, dim, certified, count, steps, digest)


class CoinvReport:
    def __init__(self, trig, components, off_diagonal=None):
        self.trig = trig
        self.components = components
        self.off_diagonal = off_diagonal or []

    @property
    def dim_trig(self):
        return self.trig.dim

    @property
    def total(self):
        return sum(c.dim for c in self.components)

    @property
    def verdict(self):
        return (self.total == self.dim_trig
                and all(c.dim == c.multiplicity for c in self.components)
                and all(r.dim == 0 for r in self.off_diagonal))

    def __repr__(self):
        return f'CoinvReport(dim_trig={self.dim_trig}, components={[c.dim for c in self.components]}, verdict={self.verdict})'


def factorization_report(weyl, window=3, max_depth=6, fuel=None, off_diagonal=False, workers=1, order='depth'):
    trig = cc_trig(weyl, window, max_depth, fuel, order)
    spaces = weight_decompose(weyl.total)

    run = functools.partial(cc_orb_component, weyl=weyl, window=window, max_depth=max_depth, fuel=fuel, order=order)
    pairs = [(ws.weight, ws.weight) for ws in spaces]
    if off_diagonal:
        pairs += [(x.weight, y.weight) for x in spaces for y in spaces if x.weight != y.weight]

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda p: run(p[0], mu=p[1]), pairs))

    components = []
    for ws, res in zip(spaces, results):
        components.append(ComponentEntry(ws.weight, res.dim, ws.multiplicity, res.raw_dim, res.certified, res.fuel, res.digest))

    return CoinvReport(trig, components, results[len(spaces):])


SmokeResult = namedtuple('SmokeResult', ('verdict', 'dim_trig', 'total', 'blocks'))
SmokeBlock = namedtuple('SmokeBlock', ('lam', 'mu', 'raw_dim', 'dim'))


def general_factorization_smoke(weyl, depth=3, max_depth=6, fuel=None, unmatched=False, workers=1):
    """
    Truncated check that the universal Verma quotients at 0 and infinity,
    cut down by the right h-action, reproduce dim CC_trig and keep only the
    diagonal blocks.
    """

    g = weyl.gauge
    trig = cc_trig(weyl, depth, max_depth, fuel)
    weights = [ws.weight for ws in weight_decompose(weyl.total)]

    at_zero = UniversalVermaQuot('zero', weights, weyl.level)
    at_inf = UniversalVermaQuot('infinity', weights, weyl.level, primed=True)

    right = at_inf.right_eigenvalues()
    if unmatched:
        shift = Weight(g, [1] * (g.n - 1))
        right = [w + shift for w in right]

    pairs = [(i, j) for i in range(len(weights)) for j in range(len(weights))]

    def block(pair):
        i, j = pair
        raw_dim, dim, *_ = _cc_orb(weyl, at_zero.twisted[i], right[j], depth, max_depth, fuel, 'depth')
        return SmokeBlock(weights[i], weights[j], raw_dim, dim)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        blocks = list(pool.map(block, pairs))

    total = sum(b.dim for b in blocks)
    verdict = (total == trig.dim
               and all(b.dim == 0 for (i, j), b in zip(pairs, blocks) if i != j)
               and all(b.dim == b.raw_dim for (i, j), b in zip(pairs, blocks) if i == j))

    return SmokeResult(verdict, trig.dim, total, blocks)


def dimension_stability(weyl, window=2, max_depth=6, fuel=None):
    """cc_trig and diagonal component dimensions at window, window + 1 and window + 2"""

    spaces = weight_decompose(weyl.total)
    out = {}

    for w in (window, window + 1, window + 2):
        dims = [cc_trig(weyl, w, max_depth, fuel).dim]
        dims += [cc_orb_component(ws.weight, weyl, ws.weight, w, max_depth, fuel).dim for ws in spaces]
        out[w] = dims

    return out
