"""Tests for exact arithmetic in Q(e) and the literal parser."""

from fractions import Fraction
import cmath

import pytest

from util.cyclofield import cyc_arith, cyc_make, cyclotomic_field, eps_pow
from util.errors import CyclotomicZeroDivision
from util.math import parse


def test_make_identity():
    f = cyclotomic_field(5)
    assert cyc_make(f, [1]) == 1
    assert cyc_make(f, [1]) == f.one


def test_make_minus_one_for_n2():
    f = cyclotomic_field(2)
    assert cyc_make(f, [0, 1]) == -1


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6, 12])
def test_roots_of_unity_sum_to_zero(n):
    f = cyclotomic_field(n)
    assert cyc_make(f, [1] * n).is_zero()


def test_make_rejects_long_arrays():
    with pytest.raises(ValueError):
        cyc_make(cyclotomic_field(3), [1, 2, 3, 4])


@pytest.mark.parametrize('n', [2, 3, 4, 5, 7])
def test_eps_inverse(n):
    f = cyclotomic_field(n)
    assert cyc_arith('mul', f.eps(1), f.eps(n - 1)) == 1
    for a in range(n):
        assert cyc_arith('inv', f.eps(a)) == f.eps(n - a)


def test_cube_roots():
    f = cyclotomic_field(3)
    total = cyc_arith('add', f.eps(1), f.eps(2))
    assert total == -1
    assert abs((f.eps(1).to_complex() + f.eps(2).to_complex()) - (-1)) < 1e-12


@pytest.mark.parametrize('n, a, expected', [(5, 0, 1), (2, 1, -1), (4, 2, -1)])
def test_eps_pow(n, a, expected):
    assert eps_pow(cyclotomic_field(n), a) == expected


def test_eps_pow_numeric():
    f = cyclotomic_field(7)
    for a in range(-7, 14):
        assert abs(f.eps(a).to_complex() - cmath.exp(2j * cmath.pi * a / 7)) < 1e-12


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6])
def test_field_axioms(n, rng):
    f = cyclotomic_field(n)

    for _ in range(50):
        x, y, z = f.random(rng), f.random(rng), f.random(rng)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inverse() == 1
            assert (y / x) * x == y


def test_zero_division():
    f = cyclotomic_field(3)

    with pytest.raises(CyclotomicZeroDivision):
        f.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        f.one / (f.eps(1) + f.eps(2) + 1)


def test_rational_elements_behave_like_fractions():
    f = cyclotomic_field(4)
    half = f(Fraction(1, 2))

    assert half == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    assert half.is_rational() and half.to_fraction() == Fraction(1, 2)
    assert 1 - half == half
    with pytest.raises(ValueError):
        f.eps(1).to_fraction()


def test_fields_do_not_mix():
    with pytest.raises(ValueError):
        cyclotomic_field(3).eps(1) + cyclotomic_field(4).eps(1)


def test_cyc_arith_predicates():
    f = cyclotomic_field(6)
    assert cyc_arith('eq', f.eps(3), f(-1))
    assert cyc_arith('is_zero', f.eps(1) - f.eps(1))
    assert cyc_arith('neg', f.eps(3)) == 1
    with pytest.raises(ValueError):
        cyc_arith('sqrt', f.one)


@pytest.mark.parametrize('literal, coeffs', [
    ('1/2', [Fraction(1, 2)]),
    ('e(1)', [0, 1]),
    ('-e(2)', [0, 0, -1]),
    ('(1 - e(1))/3', [Fraction(1, 3), Fraction(-1, 3)]),
    ('e(1)^2', [0, 0, 1]),
    ('2*e(-1)', [0, 0, 0, 0, 2]),
    ('2*-1', [-2]),
    ('2^-1', [Fraction(1, 2)]),
    ('e(1)*-1/2', [0, Fraction(-1, 2)]),
    ('1--1', [2]),
    ('+e(1)', [0, 1]),
    ('2^3^2', [512]),
    ('2^(1+1)', [4]),
])
def test_parse(literal, coeffs):
    f = cyclotomic_field(5)
    assert parse(literal, f) == f.make(coeffs)


@pytest.mark.parametrize('literal', ['', 'e(', 'x', '1/', '(1', '2^(1/2)'])
def test_parse_rejects(literal):
    with pytest.raises(ValueError):
        parse(literal, cyclotomic_field(3))


def test_str_parses_back(rng):
    f = cyclotomic_field(5)
    for _ in range(20):
        x = f.random(rng)
        assert parse(str(x), f) == x
