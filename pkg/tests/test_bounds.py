from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pombasis.bounds import (
    DegreeSequence,
    HypothesisError,
    bezout_classical,
    bezout_dim,
    bezout_dim_mu,
    bound_report,
    gb_degree_bound,
    hermann_bound,
    lazard_bound,
    masser_wustholz,
    mayr_ritscher_bound,
    membership_coeff_bound,
    membership_elim_bound,
    noether_exponent_bound_dim1,
    nullstellensatz_N,
    representation_bound,
)
from pombasis.pipeline import analyze

from conftest import load

sequences = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.lists(st.integers(1, 5), min_size=1, max_size=8), st.just(n))
)


def test_degree_sequence_normalises():
    ds = DegreeSequence([2, 5, 3], 4)
    assert ds.degrees == (5, 3, 2) and ds.k == 3 and ds.d1 == 5
    assert ds.d(4) == 1 and ds.product(4) == 30
    for bad in ([], [0, 2]):
        with pytest.raises(ValueError):
            DegreeSequence(bad, 3)


def test_nine_quadrics_in_nine_variables():
    ds = DegreeSequence([2] * 9, 9)
    assert bezout_classical(ds) == 512
    assert bezout_dim(ds, 3) == 64
    assert bezout_dim_mu(ds, 3) == 128
    assert masser_wustholz(2, 9, 3) == 64


def test_nullstellensatz_cases():
    assert nullstellensatz_N(DegreeSequence([3, 2], 5)) == 6
    assert nullstellensatz_N(DegreeSequence([4, 3, 2], 2)) == 8
    assert nullstellensatz_N(DegreeSequence([4, 3], 1)) == 3


def test_dimension_one_bounds():
    ds = DegreeSequence([4, 3], 2)
    assert lazard_bound(ds, 0) == 6
    assert noether_exponent_bound_dim1(ds, 0) == 6


def test_hypothesis_gated_bounds():
    ds = DegreeSequence([3, 2, 1], 3)
    for fn in (representation_bound, lambda d, D: membership_elim_bound(d, D, 0), gb_degree_bound):
        with pytest.raises(HypothesisError):
            fn(ds, 1)
    with pytest.raises(HypothesisError):
        membership_coeff_bound(ds, 1, 3, 3, 0)


def test_remaining_bound_values():
    ds = DegreeSequence([3, 2], 3)
    assert representation_bound(ds, 1) == 18
    assert mayr_ritscher_bound(ds, 1) == 36
    assert membership_elim_bound(ds, 1, 0) == 3 + 3 * 2 * 6 + 18
    assert membership_elim_bound(ds, 1, 100) == 100 + 18
    assert membership_coeff_bound(ds, 1, 3, 2, 1) == 1 + 6**4
    assert hermann_bound(1, 2, 3, 2) == 1 + 6**4
    assert gb_degree_bound(DegreeSequence([2, 2], 2), 0) == 2 * ((2 * 2) ** 2 + 2) // 2
    assert gb_degree_bound(ds, 1) == 2 * Fraction(36 + 3, 2) ** 2


@given(sequences)
def test_bound_chain(seq):
    degrees, n = seq
    ds = DegreeSequence(degrees, n)
    for D in range(n):
        dim = bezout_dim(ds, D)
        assert dim <= bezout_classical(ds)
        assert dim <= masser_wustholz(ds.d1, n, D)
        if D > 0:
            assert dim <= bezout_dim_mu(ds, D) <= bezout_classical(ds)


def test_invalid_dimensions():
    ds = DegreeSequence([2, 2], 3)
    with pytest.raises(ValueError):
        bezout_dim(ds, 3)
    with pytest.raises(ValueError):
        bezout_dim_mu(ds, 0)
    with pytest.raises(ValueError):
        masser_wustholz(2, 3, 3)


def test_report_on_sharp_family():
    a = analyze(load("mora_lazard"))
    rep = a.bounds()
    assert rep.all_hold
    assert rep.values["dim"] == rep.values["true_degree"] == 4
    assert rep.values["dim_attained"] is True


def test_report_notes_gated_bounds():
    a = analyze(load("saturation"))
    rep = bound_report(a.invariants, DegreeSequence([2, 2, 2, 1], 3), gb_degree=a.groebner.max_degree)
    assert rep.values["representation"] is None
    assert "n/a (d_k < 2)" in rep.notes
