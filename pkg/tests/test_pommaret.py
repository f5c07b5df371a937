import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pombasis.groebner import buchberger, ideal_membership, is_groebner
from pombasis.invariants import degree, hilbert_series, satiety
from pombasis.oracle import macaulay_hf
from pombasis.parser import IdealInput, parse_ideal, parse_polynomial
from pombasis.pommaret import (
    ImproperIdeal,
    LinearChange,
    NotQuasiStable,
    TransformExhausted,
    complete_monomials,
    involutive_normal_form,
    involutive_representation,
    is_pommaret_basis,
    is_quasi_stable,
    leading_ideal,
    monomial_pommaret_basis,
    polynomial_pommaret_basis,
    quasi_stability_witness,
    random_linear_transform,
    restrict_basis,
    saturation_basis,
    saturation_generators,
)
from pombasis.poly import MonomialIdeal, Polynomial, VariableContext, class_of, monomials_of_degree, pommaret_divides
from pombasis.random_ideals import random_quasi_stable_ideal

from conftest import load


def brute_quasi_stable(J: MonomialIdeal) -> bool:
    """For each generator m of class k and each j < k, some x_j^s * m / x_k^(m_k) lies in J."""
    cap = 2 * J.max_degree + 2
    for m in J.generators:
        k = class_of(m)
        for j in range(1, k):
            base = list(m)
            base[k - 1] = 0
            found = False
            for s in range(cap + 1):
                cand = list(base)
                cand[j - 1] += s
                if J.contains(tuple(cand)):
                    found = True
                    break
            if not found:
                return False
    return True


def brute_pommaret_monomials(J: MonomialIdeal, top: int):
    out = set()
    for d in range(1, top + 1):
        for m in monomials_of_degree(J.ctx.n, d):
            if J.contains(m):
                lower = list(m)
                lower[class_of(m) - 1] -= 1
                if not J.contains(tuple(lower)):
                    out.add(m)
    return out


small_monomial_ideals = st.lists(
    st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=4
).map(lambda gs: MonomialIdeal(VariableContext.standard(3), gs))


@given(small_monomial_ideals)
def test_quasi_stability_matches_definition(J):
    assert is_quasi_stable(J) == brute_quasi_stable(J)
    assert (quasi_stability_witness(J) is None) == is_quasi_stable(J)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1))
def test_completion_matches_characterisation(seed):
    J = random_quasi_stable_ideal(np.random.Generator(np.random.PCG64(seed)), 4, 5)
    basis = complete_monomials(J)
    top = max(sum(m) for m in basis)
    assert set(basis) == brute_pommaret_monomials(J, top)
    # involutive cones are disjoint and cover J up to a few degrees beyond
    for d in range(top + 3):
        for m in monomials_of_degree(J.ctx.n, d):
            count = sum(1 for b in basis if pommaret_divides(b, m))
            assert count == (1 if J.contains(m) else 0)


def test_worked_example_is_its_own_basis():
    ideal = load("worked_example")
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    assert set(H.elements) == set(ideal.generators)
    records = sorted(zip(H.leading_monomials, H.records()))
    assert records == [
        ((0, 3, 0), (2, 3, 2, 1)),
        ((1, 0, 1), (3, 2, 1, 2)),
        ((1, 1, 0), (2, 2, 2, 1)),
        ((2, 0, 0), (1, 2, 3, 0)),
    ]
    assert is_pommaret_basis(H.elements)


def test_not_quasi_stable_raises_with_witness():
    J = MonomialIdeal(VariableContext.standard(2), [(0, 2)])
    with pytest.raises(NotQuasiStable) as info:
        monomial_pommaret_basis(J)
    assert info.value.witness is not None
    assert not is_pommaret_basis(load("exconj").generators)


def test_transform_reaches_quasi_stable_position():
    ideal = parse_ideal("ring: x, y, z\npoly: y^2\npoly: y*z\n")
    r = random_linear_transform(ideal, seed=3)
    assert r.tries >= 1 and not r.change.is_identity
    assert is_quasi_stable(leading_ideal(r.groebner))
    again = random_linear_transform(ideal, seed=3)
    assert again.change == r.change
    H = polynomial_pommaret_basis(r.groebner)
    assert is_pommaret_basis(H.elements)


def test_identity_is_kept_when_already_quasi_stable():
    r = random_linear_transform(load("mora_lazard"), seed=11)
    assert r.tries == 0 and r.change.is_identity


def test_transform_exhaustion_and_improper_ideal():
    ideal = parse_ideal("ring: x, y\npoly: y^2\n")
    with pytest.raises(TransformExhausted) as info:
        random_linear_transform(ideal, max_tries=0)
    assert info.value.witness is not None
    ctx = VariableContext.standard(1)
    with pytest.raises(ImproperIdeal):
        random_linear_transform(IdealInput(ctx, [Polynomial.constant(ctx, 1)], "unit", [0]))


def test_linear_change_apply():
    ctx = VariableContext.standard(2)
    ch = LinearChange(((1, 1), (0, 1)))
    x = Polynomial.variable(ctx, 1)
    assert ch.apply(x * x) == parse_polynomial("x1^2 + 2*x1*x2 + x2^2", ctx)


@pytest.mark.parametrize("name", ["saturation", "mora_lazard", "worked_example"])
def test_involutive_representation(name):
    ideal = load(name)
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    f = ideal.generators[0] * parse_polynomial(" + ".join(ideal.ctx.names), ideal.ctx)
    cof, rem = involutive_representation(f, H)
    assert rem.is_zero()
    total = Polynomial.zero(ideal.ctx)
    for q, h in zip(cof, H.elements):
        total = total + q * h
        # cofactors only use multiplicative variables
        cls = class_of(h.lm)
        assert all(not any(m[: cls - 1]) for m, _ in q.terms)
    assert total == f
    g = parse_polynomial(f"{ideal.ctx.names[-1]}^4", ideal.ctx)
    r = involutive_normal_form(g, H)
    assert ideal_membership(g - r, buchberger(ideal.generators))


def test_pommaret_basis_is_groebner_basis():
    ideal = load("quasi_stable_5vars")
    G = buchberger(ideal.generators)
    H = polynomial_pommaret_basis(G)
    assert is_groebner(H.elements)
    assert leading_ideal(G).generators == MonomialIdeal(ideal.ctx, H.leading_monomials).generators


def test_restrictions_of_five_variable_example():
    ideal = load("quasi_stable_5vars")
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    assert restrict_basis(H, 6) is H
    assert degree(hilbert_series(restrict_basis(H, 4))) == 1
    s = hilbert_series(restrict_basis(H, 3))
    assert s.numerator == (1, 2, 2, 1) and degree(s) == 6


def test_saturation_of_worked_example():
    ideal = load("worked_example")
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    S = saturation_basis(H)
    ctx = ideal.ctx
    assert set(S.elements) == {parse_polynomial("x1", ctx), parse_polynomial("x2^3", ctx)}
    # x1 * x3 is in I, so x1 lies in the saturation but not in I itself
    assert not ideal_membership(parse_polynomial("x1", ctx), buchberger(ideal.generators))


def test_saturation_generators_fixture():
    ideal = load("saturation")
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    gens = saturation_generators(H)
    assert parse_polynomial("x1 + x2", ideal.ctx) in gens
    S = saturation_basis(H)
    assert set(S.elements) == {
        parse_polynomial("x2^2 + 4/5*x2*x3 + 1/5*x3^2", ideal.ctx),
        parse_polynomial("x1 + x2", ideal.ctx),
    }


@pytest.mark.parametrize("name", ["worked_example", "saturation", "quasi_stable_5vars"])
def test_saturation_agrees_from_satiety(name):
    ideal = load(name)
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    S = saturation_basis(H)
    sat = satiety(H)
    for t in range(sat, sat + 4):
        assert macaulay_hf(ideal.generators, t) == macaulay_hf(list(S.elements), t)
    if sat > 0:
        assert macaulay_hf(ideal.generators, sat - 1) != macaulay_hf(list(S.elements), sat - 1)


def test_hilbert_function_survives_transform():
    ideal = parse_ideal("ring: x, y, z\npoly: y^2\npoly: y*z - x*z\n")
    r = random_linear_transform(ideal, seed=1)
    assert r.tries >= 1
    for t in range(7):
        assert macaulay_hf(ideal.generators, t) == macaulay_hf(r.ideal.generators, t)


@pytest.mark.parametrize("name,k", [("quasi_stable_5vars", 4), ("quasi_stable_5vars", 3), ("saturation", 3)])
def test_restriction_commutes_with_leading_terms(name, k):
    ideal = load(name)
    H = polynomial_pommaret_basis(buchberger(ideal.generators))
    R = restrict_basis(H, k)
    expected = MonomialIdeal(R.ctx, [m[: k - 1] for m in H.leading_monomials if not any(m[k - 1 :])])
    assert MonomialIdeal(R.ctx, R.leading_monomials).generators == expected.generators
    assert sorted(R.leading_monomials) == sorted(complete_monomials(expected))
