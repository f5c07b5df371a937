from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from pombasis.groebner import (
    buchberger,
    ideal_membership,
    interreduce,
    is_groebner,
    max_gb_degree,
    normal_form,
    s_polynomial,
)
from pombasis.parser import parse_polynomial
from pombasis.poly import Polynomial, VariableContext, divides

from conftest import load
from strategies import from_sympy_poly, homogeneous_ideals, to_sympy

CTX = VariableContext.standard(3)
X = sympy.symbols("x1 x2 x3")


def sympy_reduced_basis(gens, ctx):
    syms = sympy.symbols(" ".join(ctx.names))
    if len(ctx.names) == 1:
        syms = (syms,)
    G = sympy.groebner([to_sympy(g, syms) for g in gens], *syms, order="grevlex")
    return sorted((from_sympy_poly(sympy.Poly(p, *syms), ctx).monic() for p in G.exprs), key=str)


def as_sorted(G):
    return sorted(G.elements, key=str)


@pytest.mark.parametrize("name", ["worked_example", "saturation", "mora_lazard", "exconj", "quasi_stable_5vars"])
def test_reduced_basis_matches_sympy(name):
    ideal = load(name)
    G = buchberger(ideal.generators)
    assert as_sorted(G) == sympy_reduced_basis(ideal.generators, ideal.ctx)


@settings(max_examples=40)
@given(homogeneous_ideals())
def test_random_bases_match_sympy(gens):
    G = buchberger(gens)
    if G.improper:
        assert sympy_reduced_basis(gens, CTX) == [Polynomial.constant(CTX, 1)]
    else:
        assert as_sorted(G) == sympy_reduced_basis(gens, CTX)
        assert is_groebner(G.elements)


def test_exconj_basis_and_membership():
    ideal = load("exconj")
    G = buchberger(ideal.generators)
    x, y = (Polynomial.variable(ideal.ctx, i) for i in (1, 2))
    assert set(G.elements) == {x * y**3 + y**4, x**3 + y**3}
    assert not ideal_membership((x + y) ** 4, G)
    assert ideal_membership((x + y) ** 5, G)


def test_unit_ideal_is_flagged():
    ctx = VariableContext.standard(2)
    x, y = (Polynomial.variable(ctx, i) for i in (1, 2))
    G = buchberger([x + y, x - y, Polynomial.constant(ctx, 1) + x])
    assert G.improper and G.elements == (Polynomial.constant(ctx, 1),)
    assert max_gb_degree(G) == 0


def test_normal_form_is_reduced_and_congruent():
    ideal = load("saturation")
    G = buchberger(ideal.generators)
    f = parse_polynomial("x1^3 + 7*x2^2*x3 - x3^3", ideal.ctx)
    r = normal_form(f, G.elements)
    heads = [g.lm for g in G.elements]
    assert all(not divides(h, m) for m, _ in r.terms for h in heads)
    assert ideal_membership(f - r, G)


def test_s_polynomial_cancels_heads():
    f = parse_polynomial("x1^2 + x2*x3", CTX)
    g = parse_polynomial("x1*x2 - 2*x3^2", CTX)
    s = s_polynomial(f, g)
    assert (2, 1, 0) not in s.as_dict()
    assert s == parse_polynomial("x2^2*x3 + 2*x1*x3^2", CTX)


def test_is_groebner_rejects_incomplete_sets():
    assert not is_groebner(load("exconj").generators)
    assert is_groebner(load("worked_example").generators)


def test_interreduce_is_monic_and_head_minimal():
    gens = [parse_polynomial(t, CTX) for t in ("2*x1^2 + x2^2", "x1^2*x2 + x3^3", "x2^2")]
    out = interreduce(gens)
    assert all(g.lc == 1 for g in out)
    heads = [g.lm for g in out]
    assert all(not divides(a, b) for a in heads for b in heads if a != b)
    assert out[0].lc == Fraction(1)
