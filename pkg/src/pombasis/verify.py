"""Cross-checks of every closed-form invariant against independent computations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import bezout_classical, bezout_dim, bezout_dim_mu, masser_wustholz
from .groebner import buchberger, is_groebner
from .invariants import (
    degree,
    degree_via_formula,
    depth,
    hilbert_function,
    hilbert_polynomial,
    evaluate,
    hilbert_regularity,
    hilbert_series,
    max_degree_max_class_generator,
    numerator_coefficients_direct,
    regularity,
    volume_function,
)
from .oracle import DifferenceWindowError, degree_by_differences, macaulay_hf, standard_monomial_count
from .parser import IdealInput
from .pipeline import Analysis, analyze
from .pommaret import leading_ideal, polynomial_pommaret_basis, restrict_basis, saturation_basis
from .poly import monomials_of_degree, pommaret_divides


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class IdealReport:
    name: str
    checks: list[CheckResult] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.checks)

    def first_failure(self) -> str | None:
        if self.error is not None:
            return "analysis"
        return next((c.name for c in self.checks if not c.ok), None)

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "ok": self.ok,
            "properties": {c.name: c.ok for c in self.checks},
            "failures": [{"property": c.name, "detail": c.detail} for c in self.checks if not c.ok],
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _expected_checks(a: Analysis, expect: dict[str, str]) -> list[CheckResult]:
    inv = a.invariants
    actual = {
        "dimension": inv.dimension,
        "degree": inv.degree,
        "regularity": inv.regularity,
        "depth": inv.depth,
        "satiety": inv.satiety,
        "hilbert_regularity": inv.hilbert_regularity,
        "numerator": ",".join(map(str, inv.hilbert_numerator)),
    }
    out = []
    for key in sorted(expect):
        if key not in actual:
            out.append(CheckResult(f"expected_{key}", False, f"unknown expectation key {key!r}"))
            continue
        ok = str(actual[key]) == expect[key]
        out.append(CheckResult(f"expected_{key}", ok, f"expected {expect[key]}, got {actual[key]}"))
    return out


def check_analysis(a: Analysis, extra_degrees: int = 3) -> list[CheckResult]:
    H = a.basis
    ideal = a.ideal
    n = ideal.ctx.n
    inv = a.invariants
    hs = a.series
    D = hs.dimension
    reg = inv.regularity
    top = reg + extra_degrees
    results: list[CheckResult] = []

    def record(name, ok, detail=""):
        results.append(CheckResult(name, bool(ok), detail))

    # involutive structure
    lms = H.leading_monomials
    bad = [(a_, b_) for i, a_ in enumerate(lms) for j, b_ in enumerate(lms) if i != j and pommaret_divides(a_, b_)]
    record("pommaret_autoreduced", not bad, f"{bad[:3]}")
    record("pommaret_is_groebner", is_groebner(H.elements))
    J = leading_ideal(a.groebner)
    cover_ok, cover_detail = True, ""
    for t in range(top + 1):
        members = [m for m in monomials_of_degree(n, t) if J.contains(m)]
        for m in members:
            count = sum(1 for lm in lms if pommaret_divides(lm, m))
            if count != 1:
                cover_ok, cover_detail = False, f"monomial {m} has {count} involutive divisors"
                break
        if not cover_ok:
            break
        if len(members) != volume_function(H, t):
            cover_ok, cover_detail = False, f"degree {t}: {len(members)} monomials vs volume {volume_function(H, t)}"
            break
    record("disjoint_cone_cover", cover_ok, cover_detail)

    # numerator: closed-form coefficients against series division
    direct = numerator_coefficients_direct(H, D)
    record("numerator_direct_vs_division", tuple(direct) == hs.numerator, f"{direct} vs {list(hs.numerator)}")
    record("numerator_degree_bound", hs.numerator_degree <= max(c - w + D for c, w in zip(H.degrees, H.multiplicative_counts)))

    # Hilbert function: formula against Macaulay matrices of the original generators
    oracle = {t: macaulay_hf(ideal.generators, t) for t in range(top + D + 2)}
    mism = [t for t in range(top + 1) if hilbert_function(H, t) != oracle[t]]
    record("hf_formula_vs_oracle", not mism, f"mismatch at degrees {mism}")

    # Macaulay: HF(I) = HF(LT(I)) in the input coordinates
    G0 = buchberger(ideal.generators)
    J0 = leading_ideal(G0)
    mism = [t for t in range(top + 1) if standard_monomial_count(J0, t) != oracle[t]]
    record("macaulay_identity", not mism, f"mismatch at degrees {mism}")

    # degree three ways
    by_formula = degree_via_formula(H, D)
    by_series = degree(hs)
    hilb = hilbert_regularity(hs)
    try:
        by_oracle = degree_by_differences(oracle, D, hilb)
    except DifferenceWindowError as exc:
        by_oracle = f"window error: {exc}"
    record(
        "degree_three_ways",
        by_formula == by_series == by_oracle,
        f"formula {by_formula}, N(1) {by_series}, oracle {by_oracle}",
    )

    # Hilbert polynomial and regularity
    hp = hilbert_polynomial(H)
    if D > 0:
        record("dim_is_deg_hp_plus_one", len(hp) == D, f"deg HP = {len(hp) - 1}, D = {D}")
    else:
        record("dim_is_deg_hp_plus_one", not hp, f"HP = {hp}")
    record("hilb_le_bound", hilb <= a.hilbert_regularity_bound, f"{hilb} vs {a.hilbert_regularity_bound}")
    agrees = all(evaluate(hp, t) == oracle[t] for t in range(hilb, top + 1))
    minimal = hilb == 0 or evaluate(hp, hilb - 1) != oracle[hilb - 1]
    record("hf_equals_hp_from_hilb", agrees and minimal, f"hilb = {hilb}")

    idx = max_degree_max_class_generator(H)
    if idx is not None:
        dep = depth(H)
        record("hilb_depth_reg", hilb + dep == max(dep, regularity(H)), f"hilb {hilb}, depth {dep}, reg {reg}")

    # bound chain
    ds = a.degree_sequence
    true_deg = inv.degree
    if D < n:
        dim_b = bezout_dim(ds, D)
        chain = true_deg <= dim_b <= bezout_classical(ds) and dim_b <= masser_wustholz(ds.d1, n, D)
        detail = f"deg {true_deg}, dim {dim_b}, classical {bezout_classical(ds)}, mw {masser_wustholz(ds.d1, n, D)}"
        if D > 0:
            mu = bezout_dim_mu(ds, D)
            chain = chain and dim_b <= mu <= bezout_classical(ds)
            detail += f", mu {mu}"
        record("bound_chain", chain, detail)

    # restriction keeps the degree in positive dimension
    if D > 0 and n - D + 2 <= n + 1:
        R = restrict_basis(H, n - D + 2)
        rdeg = degree(hilbert_series(R)) if R.elements else 1
        record("restriction_degree", rdeg == true_deg, f"{rdeg} vs {true_deg}")

    # saturation keeps the degree
    # saturation keeps the degree and agrees with I from the satiety on
    S = saturation_basis(H)
    if not S.improper:
        HS = polynomial_pommaret_basis(S)
        sdeg = degree(hilbert_series(HS))
        record("saturation_degree", sdeg == true_deg, f"{sdeg} vs {true_deg}")
        late = [t for t in range(inv.satiety, top + 1) if hilbert_function(HS, t) != oracle[t]]
        record("saturation_agrees_from_satiety", not late, f"HF differs at degrees {late}")

    results += _expected_checks(a, ideal.expect)
    return results


def verify_ideal(ideal: IdealInput, seed: int = 0, max_tries: int = 8, extra_degrees: int = 3) -> IdealReport:
    report = IdealReport(ideal.source_name)
    try:
        a = analyze(ideal, seed=seed, max_tries=max_tries)
        report.checks = check_analysis(a, extra_degrees)
    except Exception as exc:  # reported as a failed property, never a crash
        report.error = f"{type(exc).__name__}: {exc}"
    return report
