from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pombasis.groebner import buchberger
from pombasis.invariants import (
    HilbertSeries,
    binom,
    bound_hilbert_regularity,
    compute_invariants,
    degree,
    degree_via_formula,
    depth,
    dimension,
    divide_one_minus_t,
    evaluate,
    hilbert_function,
    hilbert_polynomial,
    hilbert_regularity,
    hilbert_series,
    is_noether_position,
    numerator_coefficients_direct,
    regularity,
    satiety,
    volume_function,
)
from pombasis.pommaret import monomial_pommaret_basis, polynomial_pommaret_basis
from pombasis.poly import monomials_of_degree
from pombasis.random_ideals import random_quasi_stable_ideal

from conftest import load

T = sympy.symbols("t")


def basis_of(name):
    ideal = load(name)
    G = buchberger(ideal.generators)
    return polynomial_pommaret_basis(G), G


def count_standard(J, t):
    return sum(1 for m in monomials_of_degree(J.ctx.n, t) if not J.contains(m))


def series_coefficients(numerator, D, upto):
    expr = sum(c * T**i for i, c in enumerate(numerator)) / (1 - T) ** D
    s = sympy.series(expr, T, 0, upto + 1).removeO()
    return [int(s.coeff(T, i)) for i in range(upto + 1)]


def test_worked_example_values():
    H, _ = basis_of("worked_example")
    inv = compute_invariants(H)
    assert (inv.dimension, inv.degree, inv.regularity, inv.depth, inv.satiety) == (1, 3, 3, 0, 2)
    assert inv.hilbert_regularity == 1 and inv.hilbert_numerator == (1, 2)
    # reg exceeds hilb + depth here
    assert inv.regularity > inv.hilbert_regularity + inv.depth


def test_seven_variable_values():
    H, _ = basis_of("worked_example_7vars")
    inv = compute_invariants(H)
    assert (inv.regularity, inv.hilbert_regularity, inv.depth) == (3, 0, 4)
    # and here reg < hilb + depth, so neither inequality holds in general
    assert inv.regularity < inv.hilbert_regularity + inv.depth


def test_mora_lazard_series():
    H, _ = basis_of("mora_lazard")
    s = hilbert_series(H)
    assert s.dimension == 1 and s.numerator == (1, 2, 1)
    # (1 - t^2)^2 / (1 - t)^3 equals (1 + t)^2 / (1 - t)
    assert series_coefficients(s.numerator, 1, 8) == series_coefficients([1, 0, -2, 0, 1], 3, 8)
    assert degree(s) == 4 == degree_via_formula(H)


def test_saturation_fixture_values():
    H, _ = basis_of("saturation")
    inv = compute_invariants(H)
    assert inv.hilbert_numerator == (1, 2, 0, -1)
    assert (inv.dimension, inv.degree, inv.satiety) == (1, 2, 3)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_closed_forms_against_brute_force(seed):
    J = random_quasi_stable_ideal(np.random.Generator(np.random.PCG64(seed)), 5, 5)
    H = monomial_pommaret_basis(J)
    s = hilbert_series(H)
    top = regularity(H) + 3
    hf = [count_standard(J, t) for t in range(top + 1)]
    assert [hilbert_function(H, t) for t in range(top + 1)] == hf
    assert [volume_function(H, t) + hf[t] for t in range(top + 1)] == [comb(J.ctx.n + t - 1, t) for t in range(top + 1)]
    assert [s.coefficient(t) for t in range(top + 1)] == hf
    assert series_coefficients(s.numerator, s.dimension, top) == hf
    assert list(s.numerator) == numerator_coefficients_direct(H, s.dimension)
    assert degree(s) == degree_via_formula(H, s.dimension)
    hilb = hilbert_regularity(s)
    assert hilb <= bound_hilbert_regularity(H)
    hp = hilbert_polynomial(H)
    assert all(evaluate(hp, t) == hf[t] for t in range(hilb, top + 1))
    if hilb > 0:
        assert evaluate(hp, hilb - 1) != hf[hilb - 1]
    D = s.dimension
    if D > 0:
        assert len(hp) == D and factorial(D - 1) * hp[-1] == degree(s)
    else:
        assert hp == [] and degree(s) == sum(hf)


def test_dimension_depth_and_noether_position():
    H, G = basis_of("quasi_stable_5vars")
    assert dimension(H) == 3 and depth(H) == 5 - max(H.classes)
    assert is_noether_position(G, 3)
    assert satiety(H) == max((d for d, c in zip(H.degrees, H.classes) if c == 5), default=0)


def test_polynomial_helpers():
    assert binom(5, 2) == 10 and binom(2, 5) == 0 and binom(3, -1) == 0
    assert divide_one_minus_t([1, 0, -1]) == [1, 1]
    with pytest.raises(ArithmeticError):
        divide_one_minus_t([1, 1])
    assert evaluate([Fraction(1, 2), 0, 1], 2) == Fraction(9, 2)


def test_series_validation():
    with pytest.raises(ValueError):
        HilbertSeries((1, 0), 1)
    with pytest.raises(ValueError):
        HilbertSeries((1, -1), 1)
    assert HilbertSeries((1, 1, 1), 0).coefficient(5) == 0
