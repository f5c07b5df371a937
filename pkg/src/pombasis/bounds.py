"""Degree bounds as functions of the generator degrees d_1 >= ... >= d_k."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence


class HypothesisError(ValueError):
    """A bound was requested outside the hypotheses it is proved under."""


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]
    n: int

    def __init__(self, degrees: Sequence[int], n: int):
        ds = tuple(sorted((int(d) for d in degrees), reverse=True))
        if not ds:
            raise ValueError("need at least one generator degree")
        if ds[-1] < 1:
            raise ValueError("generator degrees must be positive")
        if n < 1:
            raise ValueError("need at least one variable")
        object.__setattr__(self, "degrees", ds)
        object.__setattr__(self, "n", n)

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def d1(self) -> int:
        return self.degrees[0]

    def d(self, i: int) -> int:
        """d_i (1-based), padded with 1 beyond k."""
        return self.degrees[i - 1] if i <= self.k else 1

    def product(self, upto: int) -> int:
        return prod(self.d(i) for i in range(1, upto + 1))

    def require_no_linear(self):
        if self.degrees[-1] < 2:
            raise HypothesisError("bound requires d_k >= 2")


def bezout_classical(ds: DegreeSequence) -> int:
    return ds.product(min(ds.k, ds.n))


def bezout_dim_mu(ds: DegreeSequence, D: int) -> int:
    if D <= 0:
        raise ValueError("the mu-bound needs positive dimension")
    return ds.product(min(ds.k, ds.n - D + 1))


def bezout_dim(ds: DegreeSequence, D: int) -> int:
    if not 0 <= D <= ds.n - 1:
        raise ValueError(f"dimension {D} outside 0..{ds.n - 1}")
    return ds.product(ds.n - D)


def masser_wustholz(d1: int, n: int, D: int) -> int:
    if n - D < 1:
        raise ValueError("need n - D >= 1")
    return d1 ** (n - D)


def nullstellensatz_N(ds: DegreeSequence) -> int:
    n, k = ds.n, ds.k
    if n == 1:
        return ds.d(k)
    if n >= k:
        return ds.product(k)
    return ds.d(k) * ds.product(n - 1)


def lazard_bound(ds: DegreeSequence, depth: int) -> int:
    r = ds.n - depth
    return sum(ds.d(i) for i in range(1, r + 1)) - r + 1


def noether_exponent_bound_dim1(ds: DegreeSequence, depth: int) -> int:
    return max(ds.product(ds.n - 1), lazard_bound(ds, depth))


def representation_bound(ds: DegreeSequence, D: int) -> int:
    ds.require_no_linear()
    return 3 * ds.product(ds.n - D)


def mayr_ritscher_bound(ds: DegreeSequence, D: int) -> int:
    return ds.product(ds.n - D) ** 2


def membership_elim_bound(ds: DegreeSequence, D: int, deg_f: int) -> int:
    ds.require_no_linear()
    p = ds.product(ds.n - D)
    return max(deg_f, ds.d1 + 3 * (ds.n - D) * p) + 3 * p


def membership_coeff_bound(ds: DegreeSequence, D: int, n: int, k: int, deg_f: int) -> int:
    ds.require_no_linear()
    return deg_f + (k * ds.d1**D) ** (2 ** (n - D))


def hermann_bound(c: int, d: int, s: int, n: int) -> int:
    return c + (d * s) ** (2**n)


def gb_degree_bound(ds: DegreeSequence, D: int) -> int | Fraction:
    """2 * ((p^(n-D) + d_1) / 2)^(2^D) with p = d_1 ... d_(n-D), kept exact."""
    ds.require_no_linear()
    p = ds.product(ds.n - D)
    value = 2 * (Fraction(1, 2) * (p ** (ds.n - D) + ds.d1)) ** (2**D)
    return int(value) if value.denominator == 1 else value


@dataclass
class BoundReport:
    values: dict[str, object]
    inputs: dict[str, object]
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        return {"values": self.values, "inputs": self.inputs, "checks": self.checks, "notes": self.notes}


def bound_report(invariants, ds: DegreeSequence, gb_degree: int | None = None) -> BoundReport:
    """Evaluate every applicable bound and compare with the computed degree."""
    D, true_degree, dep = invariants.dimension, invariants.degree, invariants.depth
    n = ds.n
    values: dict[str, object] = {
        "true_degree": true_degree,
        "classical": bezout_classical(ds),
        "nullstellensatz_N": nullstellensatz_N(ds),
    }
    notes: list[str] = []
    checks: dict[str, bool] = {"classical": true_degree <= values["classical"]}
    if D <= n - 1:
        values["dim"] = bezout_dim(ds, D)
        values["masser_wustholz"] = masser_wustholz(ds.d1, n, D)
        checks["dim"] = true_degree <= values["dim"]
        checks["dim_le_mw"] = values["dim"] <= values["masser_wustholz"]
        checks["dim_le_classical"] = values["dim"] <= values["classical"]
        values["dim_attained"] = values["dim"] == true_degree
    if D > 0:
        values["dim_mu"] = bezout_dim_mu(ds, D)
        checks["dim_mu"] = true_degree <= values["dim_mu"]
        if "dim" in values:
            checks["dim_le_dim_mu"] = values["dim"] <= values["dim_mu"]
        checks["dim_mu_le_classical"] = values["dim_mu"] <= values["classical"]
    if D <= 1:
        values["lazard"] = lazard_bound(ds, dep)
        notes.append("lazard bound assumes generic position; evaluated after the quasi-stable transform")
        if gb_degree is not None:
            values["gb_degree"] = gb_degree
    if D == 1:
        values["noether_exponent_dim1"] = noether_exponent_bound_dim1(ds, dep)
        notes.append("noether exponent bound assumes characteristic zero")
    if ds.degrees[-1] >= 2 and D <= n - 1:
        values["representation"] = representation_bound(ds, D)
        values["mayr_ritscher"] = mayr_ritscher_bound(ds, D)
        values["membership_elim_deg0"] = membership_elim_bound(ds, D, 0)
        values["membership_coeff_deg0"] = membership_coeff_bound(ds, D, n, ds.k, 0)
        values["gb_degree_bound"] = gb_degree_bound(ds, D)
    else:
        for name in ("representation", "mayr_ritscher", "membership_elim_deg0", "membership_coeff_deg0", "gb_degree_bound"):
            values[name] = None
        notes.append("n/a (d_k < 2)" if ds.degrees[-1] < 2 else "n/a (D = n)")
    inputs = {"n": n, "D": D, "k": ds.k, "degrees": list(ds.degrees), "depth": dep}
    return BoundReport(values, inputs, checks, notes)
