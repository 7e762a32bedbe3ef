"""Tests for sl_N in the J-basis, twisted weights and finite modules."""

from fractions import Fraction

import numpy as np
import pytest

from util.errors import InvalidModuleError
from util.liealg import (FiniteModule, LieElement, Weight, ad_auto, adjoint_trace_inner, inner, j_basis, mat_equal,
                         mat_power, parse_rep, sl, tilde_weights, weight_decompose)
from util.linalg import identity, rank


def obj(rows):
    return np.array(rows, dtype=object)


def test_beta_gamma_n2():
    g = sl(2)
    assert mat_equal(g.beta, obj([[0, 1], [1, 0]]))
    assert mat_equal(g.gamma, obj([[1, 0], [0, -1]]))
    assert mat_equal(g.gamma @ g.beta, g.beta @ g.gamma * g.eps(1))


@pytest.mark.parametrize('n', [2, 3, 4])
def test_beta_gamma_orders(n):
    g = sl(n)
    one = identity(n, g.zero, g.one)
    assert mat_equal(g.beta @ mat_power(g.beta, n - 1), one)
    assert mat_equal(g.gamma @ mat_power(g.gamma, n - 1), one)
    assert mat_equal(g.gamma @ g.beta, g.beta @ g.gamma * g.eps(1))


def test_j_basis_examples():
    g = sl(2)
    assert mat_equal(j_basis(g, 1, 1), obj([[0, -1], [1, 0]]))

    g3 = sl(3)
    diag = [g3.eps(i) for i in range(3)]
    assert mat_equal(j_basis(g3, 0, 1), np.diag(np.array(diag, dtype=object)))


@pytest.mark.parametrize('n', [2, 3, 4])
def test_j_basis_independent(n):
    g = sl(n)
    flat = np.array([list(g.j(a, b).flat) for a, b in g.basis], dtype=object)
    assert rank(flat) == n * n - 1


@pytest.mark.parametrize('n', [2, 3])
def test_ad_eigenvalues(n):
    g = sl(n)

    for a, b in g.basis:
        x = g.element(a, b)
        assert ad_auto('gamma', x) == x * g.eps(a)
        assert ad_auto('beta', x) == x * g.eps(b)
        assert mat_equal(x.ad_gamma().to_matrix(), g.gamma @ g.j(a, b) @ mat_power(g.gamma, -1))
        assert mat_equal(x.ad_beta().to_matrix(), g.beta @ g.j(a, b) @ mat_power(g.beta, -1))

    assert ad_auto('beta', LieElement(g)) == 0
    with pytest.raises(ValueError):
        ad_auto('delta', g.element(1, 0))


@pytest.mark.parametrize('n', [2, 3])
def test_bracket_matches_commutator(n):
    g = sl(n)

    for p in g.basis:
        for q in g.basis:
            x, y = g.element(*p), g.element(*q)
            assert mat_equal(x.bracket(y).to_matrix(), g.j(*p) @ g.j(*q) - g.j(*q) @ g.j(*p))


def test_inner_examples():
    g = sl(2)
    assert inner(g.h(1), g.h(1)) == 2


@pytest.mark.parametrize('n', [2, 3])
def test_inner_selection_rule(n):
    g = sl(n)

    for a, b in g.basis:
        for c, d in g.basis:
            value = inner(g.element(a, b), g.element(c, d))
            if (a + c) % n or (b + d) % n:
                assert value == 0
            else:
                assert value == g.eps(-b * c) * n


@pytest.mark.parametrize('n', [2, 3])
def test_adjoint_trace_form_matches_trace_form(n, rng):
    g = sl(n)

    for p in g.basis:
        for q in g.basis:
            x, y = g.element(*p), g.element(*q)
            assert adjoint_trace_inner(x, y) == inner(x, y)

    for _ in range(5):
        x, y = g.random_element(rng), g.random_element(rng)
        assert adjoint_trace_inner(x, y) == inner(x, y)
        assert inner(x, y) == inner(y, x)

    assert adjoint_trace_inner(LieElement(g), g.element(1, 1)) == 0


@pytest.mark.parametrize('n', [2, 3])
def test_from_matrix(n, rng):
    g = sl(n)
    x = g.random_element(rng, 4)
    assert g.from_matrix(x.to_matrix()) == x

    with pytest.raises(ValueError):
        g.from_matrix(identity(n, g.zero, g.one))


def test_identity_is_not_in_sl():
    with pytest.raises(ValueError):
        LieElement(sl(3), {(0, 0): 1})


def test_tilde_weights_n2(rng):
    g = sl(2)
    t, tp = tilde_weights(Weight(g, [1]))
    assert t == Weight(g, [Fraction(-1, 2)])
    assert tp == Weight(g, [Fraction(-1, 2)])

    for _ in range(100):
        lam = Weight(g, [g.field.random(rng)])
        assert lam.tilde() == lam * Fraction(-1, 2)


def test_tilde_of_zero():
    g = sl(3)
    t, tp = tilde_weights(Weight.zero(g))
    assert t.is_zero() and tp.is_zero()


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_tilde_sum(n, rng):
    g = sl(n)
    for _ in range(100):
        lam = Weight(g, [g.field.random(rng, 3) for _ in range(n - 1)])
        t, tp = tilde_weights(lam)
        assert t + tp == -lam


@pytest.mark.parametrize('n', [2, 3, 4])
def test_weight_diagonal_coordinates(n, rng):
    g = sl(n)
    lam = Weight(g, [g.field.random(rng, 3) for _ in range(n - 1)])
    diag = lam.to_diagonal()
    assert sum(diag, g.zero) == 0
    assert Weight.from_diagonal(g, diag) == lam


def test_weight_evaluation():
    g = sl(3)
    lam = Weight(g, [2, g.eps(1)])
    assert lam(g.h(1, 3) + g.h(2)) == g.eps(1) + 6
    with pytest.raises(ValueError):
        lam(g.element(1, 0))


@pytest.mark.parametrize('expr', ['def', 'dual', 'triv', 'def*dual', 'def*def'])
@pytest.mark.parametrize('n', [2, 3])
def test_builtin_modules_are_representations(expr, n):
    assert parse_rep(sl(n), expr).representation_violations() == 0


@pytest.mark.parametrize('expr', ['adj', 'def*', '', 'def**dual'])
def test_parse_rep_rejects(expr):
    with pytest.raises(InvalidModuleError):
        parse_rep(sl(2), expr)


def test_weight_decompose_defining_n2():
    g = sl(2)
    spaces = weight_decompose(FiniteModule.defining(g))
    assert {ws.weight: ws.multiplicity for ws in spaces} == {Weight(g, [1]): 1, Weight(g, [-1]): 1}


def test_weight_decompose_tensor_n2():
    g = sl(2)
    spaces = weight_decompose(parse_rep(g, 'def*def'))
    assert [ws.weight for ws in spaces] == [Weight(g, [2]), Weight(g, [0]), Weight(g, [-2])]
    assert [ws.multiplicity for ws in spaces] == [1, 2, 1]


def test_weight_decompose_trivial():
    g = sl(3)
    (ws,) = weight_decompose(FiniteModule.trivial(g))
    assert ws.weight.is_zero() and ws.multiplicity == 1


def test_weight_decompose_in_a_non_diagonal_basis():
    g = sl(2)
    p = obj([[g.one, g.one], [g.one, g.one * 2]])
    p_inv = obj([[g.one * 2, -g.one], [-g.one, g.one]])
    module = FiniteModule(g, 'def', 2, {k: p @ g.j(*k) @ p_inv for k in g.basis})

    spaces = weight_decompose(module)
    assert {ws.weight: ws.multiplicity for ws in spaces} == {Weight(g, [1]): 1, Weight(g, [-1]): 1}

    (h,) = module.cartan_matrices()
    for ws in spaces:
        assert mat_equal(h @ ws.projector, ws.projector * ws.weight.value(1))


@pytest.mark.parametrize('expr', ['def', 'def*dual'])
def test_projectors(expr):
    g = sl(3)
    module = parse_rep(g, expr)
    spaces = weight_decompose(module)
    one = identity(module.dim, g.zero, g.one)

    total = sum((ws.projector for ws in spaces[1:]), spaces[0].projector)
    assert mat_equal(total, one)
    assert sum(ws.multiplicity for ws in spaces) == module.dim

    for ws in spaces:
        p = ws.projector
        assert mat_equal(p @ p, p)
        for h, value in zip(module.cartan_matrices(), ws.weight.values):
            assert mat_equal(h @ p, p * value)
