"""Parse -> quasi-stable position -> Pommaret basis -> invariants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .bounds import BoundReport, DegreeSequence, bound_report
from .groebner import GroebnerBasis, buchberger
from .invariants import (
    HilbertSeries,
    IdealInvariants,
    bound_hilbert_regularity,
    compute_invariants,
    hilbert_series,
)
from .parser import IdealInput
from .pommaret import (
    LinearChange,
    PommaretBasis,
    TransformResult,
    polynomial_pommaret_basis,
    random_linear_transform,
)


@dataclass
class Analysis:
    ideal: IdealInput
    transform: TransformResult
    basis: PommaretBasis

    @property
    def change(self) -> LinearChange:
        return self.transform.change

    @property
    def groebner(self) -> GroebnerBasis:
        return self.transform.groebner

    @cached_property
    def series(self) -> HilbertSeries:
        return hilbert_series(self.basis)

    @cached_property
    def invariants(self) -> IdealInvariants:
        return compute_invariants(self.basis, gb_degree=self.groebner.max_degree)

    @cached_property
    def hilbert_regularity_bound(self) -> int:
        return bound_hilbert_regularity(self.basis)

    @cached_property
    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.ideal.degrees, self.ideal.ctx.n)

    def bounds(self) -> BoundReport:
        return bound_report(self.invariants, self.degree_sequence, gb_degree=self.groebner.max_degree)


def analyze(ideal: IdealInput, seed: int = 0, max_tries: int = 8) -> Analysis:
    tr = random_linear_transform(ideal, seed=seed, max_tries=max_tries)
    return Analysis(ideal, tr, polynomial_pommaret_basis(tr.groebner))


def input_groebner(ideal: IdealInput) -> GroebnerBasis:
    return buchberger(ideal.generators)
