"""Tests for the modules at the insertion sites and the PBW engine acting on them."""

import pytest

from util.errors import DepthOverflow, FuelExhausted, InvalidModuleError, SectionError
from util.liealg import FiniteModule, Weight, parse_rep, sl
from util.modules import Insertion, Mode, ModVector, UniversalVermaQuot, VermaModule, WeylModule
from util.properties import bracket_jacobi, pbw_counts, rho_scalar, smoothness
from util.sections import Curve, check_membership, constant_section, h_section, trig_basis_element


def verma_engine(n=2, weight=None, level=1, **kw):
    g = sl(n)
    curve = Curve(g, [1])
    weight = weight or Weight.zero(g)
    return Insertion(curve, {0: VermaModule('zero', weight, level)}, level, **kw)


def orb_engine(n, lam, mu, rep='def', level=1, **kw):
    g = sl(n)
    curve = Curve(g, [1])
    slots = {
        0: VermaModule('zero', lam.tilde(), level),
        1: WeylModule(parse_rep(g, rep), level),
        2: VermaModule('infinity', mu.tilde_prime(), level),
    }
    return Insertion(curve, slots, level, **kw)


def test_positive_mode_kills_highest_weight():
    e = verma_engine()
    assert not e.act(Mode(1, 0, 1, 1), ((), (0,)))
    assert not e.act(Mode(2, 0, 0, 1), ((), (0,)))


def test_zero_mode_on_verma_generator():
    g = sl(3)
    lam = Weight(g, [2, g.eps(1)])
    e = verma_engine(3, lam)
    assert e.act(Mode(0, 0, 0, 2), ((), (0,))) == {((), (0,)): g.eps(1)}


def test_central_term_at_zero():
    # [J11 t, J11 t^-1] = (1/2) tr(J11^2) k at the fixed point 0
    for level in (1, 3):
        e = verma_engine(2, level=level)
        x, y = Mode(1, 0, 1, 1), Mode(-1, 0, 1, 1)

        lie, coef, central = e.bracket(x, y)
        assert lie is None and central == -level

        two_ways = e.act(x, ((y,), (0,)))
        assert two_ways == {((), (0,)): -level}


def test_check_mode():
    e = verma_engine()
    with pytest.raises(SectionError):
        e.apply(Mode(-2, 0, 1, 1), e.vacuum((0,)))
    with pytest.raises(SectionError):
        e.apply(Mode(-1, 1, 1, 1), e.vacuum((0,)))


def test_depth_cap_and_fuel():
    e = verma_engine(max_depth=2)
    key = ((Mode(-1, 0, 1, 0),), (0,))
    with pytest.raises(DepthOverflow):
        e.act(Mode(-3, 0, 1, 0), key)

    e = verma_engine(fuel=3)
    with pytest.raises(FuelExhausted):
        e.apply(Mode(1, 0, 1, 1), ModVector({((Mode(-1, 0, 1, 1),) * 3, (0,)): 1}))


def test_pbw_counts():
    for n in (2, 3):
        result = pbw_counts(n, 4)
        assert result.violations == 0, result.details


def test_normal_order_is_sorted():
    e = verma_engine(2, max_depth=4)
    for modes in e.monomials(4):
        assert list(modes) == sorted(modes)
        assert all(m.n < 0 for m in modes)


def test_weyl_zero_modes_act_through_v():
    g = sl(2)
    e = orb_engine(2, Weight(g, [1]), Weight(g, [1]))
    out = e.act(Mode(0, 1, 1, 0), ((), (0, 0, 0)))
    assert out == {((), (0, 1, 0)): 1}


def test_constant_section_scalar():
    # H acts on 1 (x) v_nu (x) 1 by lambda~ + nu + mu~'
    g = sl(3)
    lam, mu = Weight(g, [1, g.eps(2)]), Weight(g, [0, 1])
    e = orb_engine(3, lam, mu)
    spaces = [((0,), Weight(g, [1, 1])), ((1,), Weight(g, [g.eps(1), g.eps(2)])), ((2,), Weight(g, [g.eps(2), g.eps(1)]))]

    for b in (1, 2):
        f = constant_section(e.curve, g.h(b))
        for (i,), nu in spaces:
            vec = e.vacuum((0, i, 0))
            scalar = lam.tilde().value(b) + nu.value(b) + mu.tilde_prime().value(b)
            assert e.act_section(f, vec) == vec * scalar


def test_matched_constant_section_leaves_only_v_charge():
    g = sl(2)
    lam = Weight(g, [1])
    e = orb_engine(2, lam, lam)
    f = constant_section(e.curve, g.h(1))
    vec = e.vacuum((0, 0, 0))

    # lambda~ + lambda~' = -lambda, and v_0 has weight +1 = lambda
    assert not e.act_section(f, vec)


def test_act_section_membership():
    g = sl(2)
    e = orb_engine(2, Weight(g, [1]), Weight(g, [1]))
    f = h_section(e.curve, 1, 1)

    assert e.act_section(f, e.vacuum((0, 0, 0)), 'trig') == e.act_section(f, e.vacuum((0, 0, 0)), 'orb')
    with pytest.raises(SectionError):
        e.act_section(f, e.vacuum((0, 0, 0)), 'zero')


def test_gout_zero_kills_vacuum_at_fixed_points():
    g = sl(2)
    lam = Weight(g, [1])
    curve = Curve(g, [1])
    slots = {0: VermaModule('zero', lam.tilde(), 1), 2: VermaModule('infinity', lam.tilde_prime(), 1)}
    e = Insertion(curve, slots, 1)

    f = trig_basis_element(curve, 1, 1, 1)
    assert check_membership(f, 'zero')
    assert not e.act_section(f, e.vacuum((0, 0)), None)


def test_right_h_is_the_highest_weight():
    g = sl(2)
    lam, mu = Weight(g, [1]), Weight(g, [-1])
    e = orb_engine(2, lam, mu)
    h = g.h(1, 3)

    vacuum = e.vacuum((0, 1, 0))
    assert e.right_h(vacuum, 0, h) == vacuum * lam.tilde()(h)

    word = ModVector({((Mode(-1, 0, 1, 1), Mode(-1, 1, 1, 0)), (0, 0, 0)): 1})
    assert e.right_h(word, 0, h) == word * lam.tilde()(h)
    assert e.right_h(word, 2, h) == word * mu.tilde_prime()(h)

    with pytest.raises(InvalidModuleError):
        e.right_h(word, 1, h)


def test_right_h_commutes_with_left_action():
    g = sl(2)
    lam = Weight(g, [1])
    e = orb_engine(2, lam, lam)
    h = g.h(1)
    vec = e.vacuum((0, 0, 0))

    for mode in (Mode(-1, 0, 1, 0), Mode(-2, 0, 0, 1), Mode(-1, 2, 1, 1)):
        assert e.right_h(e.apply(mode, vec), 0, h) == e.apply(mode, e.right_h(vec, 0, h))


def test_rho_scalar():
    g = sl(2)
    lam, mu = Weight(g, [1]), Weight(g, [-1])
    e = orb_engine(2, lam, mu)
    vec = e.vacuum((0, 0, 0))

    scalar = g.eps(1) * (lam - mu).value(1) / (1 - g.eps(1))
    assert e.rho_1_beta(vec, g.h(1)) == vec * scalar

    matched = orb_engine(2, lam, lam)
    assert not matched.rho_1_beta(vec, g.h(1))


@pytest.mark.parametrize('n', [2, 3])
def test_property_suites(n, rng):
    g = sl(n)
    curve = Curve(g, [1])
    lam = Weight.zero(g)
    slots = {
        0: VermaModule('zero', lam, 1),
        1: WeylModule(FiniteModule.defining(g), 1),
        2: VermaModule('infinity', lam, 1),
    }

    assert bracket_jacobi(Insertion(curve, slots, 1), rng).violations == 0
    assert smoothness(Insertion(curve, slots, 1, smooth_cutoff=False), rng, depth=2).violations == 0
    assert rho_scalar(curve, [FiniteModule.defining(g)], 1, rng).violations == 0


def test_universal_verma_quotient():
    g = sl(2)
    weights = [Weight(g, [1]), Weight(g, [-1])]
    at_zero = UniversalVermaQuot('zero', weights, 1)

    assert len(at_zero) == 2
    assert at_zero.twisted == [w.tilde() for w in weights]
    assert [m.weight for m in at_zero.components()] == at_zero.twisted

    with pytest.raises(InvalidModuleError):
        UniversalVermaQuot('zero', [weights[0], weights[0]], 1)


def test_verma_modules_live_at_fixed_points():
    with pytest.raises(InvalidModuleError):
        VermaModule('marked', Weight.zero(sl(2)), 1)

    g = sl(2)
    curve = Curve(g, [1])
    with pytest.raises(InvalidModuleError):
        Insertion(curve, {1: VermaModule('zero', Weight.zero(g), 1)}, 1)
