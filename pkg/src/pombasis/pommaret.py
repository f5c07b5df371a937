"""Pommaret bases: quasi-stability, involutive completion, lifting and coordinate changes."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .groebner import GroebnerBasis, buchberger, reduce_terms
from .parser import IdealInput
from .poly import (
    Monomial,
    MonomialIdeal,
    Polynomial,
    VariableContext,
    class_of,
    divides,
    heap_key,
    is_pure_power,
    mono_div,
    monomials_of_degree,
    pommaret_divides,
    sort_key,
)


class NotQuasiStable(ValueError):
    """The leading ideal is not quasi-stable; a coordinate change is needed."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ImproperIdeal(ValueError):
    pass


class TransformExhausted(RuntimeError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CompletionCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PommaretBasis:
    ctx: VariableContext
    elements: tuple[Polynomial, ...]

    @property
    def n(self) -> int:
        return self.ctx.n

    @cached_property
    def leading_monomials(self) -> list[Monomial]:
        return [h.lm for h in self.elements]

    @cached_property
    def classes(self) -> list[int]:
        return [class_of(m) for m in self.leading_monomials]

    @cached_property
    def degrees(self) -> list[int]:
        return [sum(m) for m in self.leading_monomials]

    @cached_property
    def multiplicative_counts(self) -> list[int]:
        return [self.n - c + 1 for c in self.classes]

    @cached_property
    def nonmultiplicative_counts(self) -> list[int]:
        return [c - 1 for c in self.classes]

    def records(self):
        """(class, degree, |X_P|, non-multiplicative count) per element."""
        return list(zip(self.classes, self.degrees, self.multiplicative_counts, self.nonmultiplicative_counts))

    @property
    def is_proper(self) -> bool:
        return all(d > 0 for d in self.degrees)

    def check_invariants(self):
        lms = self.leading_monomials
        for i, a in enumerate(lms):
            for j, b in enumerate(lms):
                if i != j and pommaret_divides(a, b):
                    raise AssertionError(f"{a} Pommaret-divides {b}")
        for cls, deg, mult, nonmult in self.records():
            assert mult + nonmult == self.n


@dataclass(frozen=True)
class LinearChange:
    """x_i -> sum_j matrix[i][j] x_j."""

    matrix: tuple[tuple[int, ...], ...]
    seed: int = 0
    attempt: int = 0
    bound: int = 0

    @classmethod
    def identity(cls, n: int, seed: int = 0) -> "LinearChange":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), seed, 0, 0)

    @property
    def is_identity(self) -> bool:
        return all(v == int(i == j) for i, row in enumerate(self.matrix) for j, v in enumerate(row))

    def apply(self, f: Polynomial) -> Polynomial:
        ctx = f.ctx
        images = [
            Polynomial(ctx, [(tuple(int(k == j) for k in range(ctx.n)), Fraction(v)) for j, v in enumerate(row) if v])
            for row in self.matrix
        ]
        return f.evaluate_linear_change(images)


# -- quasi-stability ------------------------------------------------------------


def quasi_stability_witness(J: MonomialIdeal):
    """First (generator, i, j) violating quasi-stability, or None."""
    if not J.is_proper:
        raise ImproperIdeal("quasi-stability is only defined for proper ideals")
    t = J.max_degree
    for m in J.generators:
        for i in range(len(m)):
            s = m[i]
            if not s:
                continue
            for j in range(i):
                probe = list(m)
                probe[i] = 0
                probe[j] += t
                if not J.contains(tuple(probe)):
                    return (m, i + 1, j + 1)
    return None


def is_quasi_stable(J: MonomialIdeal) -> bool:
    return quasi_stability_witness(J) is None


def _pommaret_divisor(m: Monomial, candidates) -> Monomial | None:
    for b in candidates:
        if pommaret_divides(b, m):
            return b
    return None


def complete_monomials(J: MonomialIdeal) -> list[Monomial]:
    """Involutive completion by non-multiplicative prolongations, lowest degree first."""
    if not is_quasi_stable(J):
        raise NotQuasiStable("monomial ideal is not quasi-stable", quasi_stability_witness(J))
    cap = (J.ctx.n + 1) * J.max_degree
    basis = list(J.generators)
    queue: list = []

    def push_prolongations(m: Monomial):
        for j in range(class_of(m) - 1):
            p = list(m)
            p[j] += 1
            p = tuple(p)
            heapq.heappush(queue, (sort_key(p), p))

    for m in basis:
        push_prolongations(m)
    seen = set(basis)
    while queue:
        _, p = heapq.heappop(queue)
        if p in seen:
            continue
        seen.add(p)
        if _pommaret_divisor(p, basis) is not None:
            continue
        if sum(p) > cap:
            raise CompletionCapExceeded(f"prolongation {p} exceeds degree cap {cap}")
        basis.append(p)
        push_prolongations(p)
    basis.sort(key=sort_key, reverse=True)
    return basis


def monomial_pommaret_basis(J: MonomialIdeal) -> PommaretBasis:
    elems = tuple(Polynomial.monomial(J.ctx, m) for m in complete_monomials(J))
    return PommaretBasis(J.ctx, elems)


def leading_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal(G.ctx, G.leading_monomials())


def polynomial_pommaret_basis(G: GroebnerBasis) -> PommaretBasis:
    if G.improper:
        raise ImproperIdeal("the unit ideal has no Pommaret basis")
    J = leading_ideal(G)
    witness = quasi_stability_witness(J)
    if witness is not None:
        raise NotQuasiStable(
            "leading ideal is not quasi-stable; apply random_linear_transform first", witness
        )
    by_head = sorted(G.elements, key=lambda g: sort_key(g.lm), reverse=True)
    elems = []
    for u in complete_monomials(J):
        g = next(g for g in by_head if divides(g.lm, u))
        elems.append(g.mul_monomial(mono_div(u, g.lm)))
    return PommaretBasis(G.ctx, tuple(elems))


def involutive_normal_form(f: Polynomial, H: PommaretBasis) -> Polynomial:
    heads = [(h.lm, h) for h in H.elements]

    def find(m):
        for lm, h in heads:
            if pommaret_divides(lm, m):
                return h
        return None

    return reduce_terms(f, find)


def involutive_representation(f: Polynomial, H: PommaretBasis):
    """Cofactors ``q_i`` and remainder with ``f = sum q_i h_i + r`` (involutive division)."""
    ctx = f.ctx
    cof: list[dict] = [dict() for _ in H.elements]
    heads = list(enumerate(h.lm for h in H.elements))
    acc = dict(f.terms)
    heap = [(heap_key(m), m) for m in acc]
    heapq.heapify(heap)
    rem = []
    while heap:
        _, m = heapq.heappop(heap)
        c = acc.pop(m, None)
        if not c:
            continue
        idx = next((i for i, lm in heads if pommaret_divides(lm, m)), None)
        if idx is None:
            rem.append((m, c))
            continue
        h = H.elements[idx]
        q = mono_div(m, h.lm)
        factor = c / h.lc
        cof[idx][q] = cof[idx].get(q, 0) + factor
        for tm, tc in h.terms[1:]:
            mm = tuple(a + b for a, b in zip(tm, q))
            new = acc.get(mm, 0) - factor * tc
            if mm not in acc:
                heapq.heappush(heap, (heap_key(mm), mm))
            if new:
                acc[mm] = new
            else:
                acc.pop(mm, None)
    return [Polynomial(ctx, c.items()) for c in cof], Polynomial(ctx, rem, _sorted=True)


# -- coordinate changes ----------------------------------------------------------


def _random_matrix(rng: np.random.Generator, n: int, bound: int) -> list[list[int]]:
    while True:
        mat = rng.integers(-bound, bound + 1, size=(n, n)).tolist()
        for i in range(n):
            while mat[i][i] == 0:
                mat[i][i] = int(rng.integers(-bound, bound + 1))
        if _det(mat) != 0:
            return [[int(v) for v in row] for row in mat]


def _det(mat) -> Fraction:
    a = [[Fraction(v) for v in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / a[c][c]
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


@dataclass
class TransformResult:
    ideal: IdealInput
    change: LinearChange
    groebner: GroebnerBasis
    tries: int
    failures: list = field(default_factory=list)


def transform_ideal(ideal: IdealInput, change: LinearChange) -> IdealInput:
    gens = [change.apply(g) for g in ideal.generators]
    return IdealInput(ideal.ctx, gens, ideal.source_name, list(ideal.original_order), dict(ideal.expect))


def random_linear_transform(ideal: IdealInput, seed: int = 0, max_tries: int = 8) -> TransformResult:
    """Bring the ideal into quasi-stable position (identity first, then seeded random matrices).

    Matrix entries are drawn uniformly from {-B..B} with a PCG64 generator seeded
    by ``seed``; B starts at 1 and doubles after each failed try.
    """
    n = ideal.ctx.n
    G = buchberger(ideal.generators)
    if G.improper:
        raise ImproperIdeal("the ideal is the whole ring")
    witness = quasi_stability_witness(leading_ideal(G))
    if witness is None:
        return TransformResult(ideal, LinearChange.identity(n, seed), G, 0)
    failures = [witness]
    rng = np.random.Generator(np.random.PCG64(seed))
    bound = 1
    for attempt in range(1, max_tries + 1):
        change = LinearChange(tuple(map(tuple, _random_matrix(rng, n, bound))), seed, attempt, bound)
        moved = transform_ideal(ideal, change)
        G = buchberger(moved.generators)
        witness = quasi_stability_witness(leading_ideal(G))
        if witness is None:
            return TransformResult(moved, change, G, attempt, failures)
        failures.append(witness)
        bound *= 2
    raise TransformExhausted(f"no quasi-stable position after {max_tries} tries", failures[-1])


# -- restriction and saturation ------------------------------------------------------


def restrict_basis(H: PommaretBasis, from_index: int) -> PommaretBasis:
    """Pommaret basis of I restricted to x_from_index = ... = x_n = 0."""
    if from_index == H.n + 1:
        return H
    restricted = [h.substitute_zero(from_index) for h in H.elements]
    restricted = [h for h in restricted if not h.is_zero()]
    ctx = H.ctx.prefix(from_index - 1)
    kept: list[Polynomial] = []
    for h in sorted(restricted, key=lambda p: sort_key(p.lm)):
        if not any(pommaret_divides(g.lm, h.lm) for g in kept):
            kept.append(h)
    kept.sort(key=lambda p: sort_key(p.lm), reverse=True)
    return PommaretBasis(ctx, tuple(kept))


def saturation_generators(H: PommaretBasis) -> list[Polynomial]:
    """H with every class-n element divided by its x_n-power (a Pommaret basis of I : x_n^oo)."""
    n = H.n
    out = []
    for h, cls in zip(H.elements, H.classes):
        if cls == n:
            e = h.lm[n - 1]
            out.append(h.divide_by_variable_power(n, e))
        else:
            out.append(h)
    return out


def saturation_basis(H: PommaretBasis) -> GroebnerBasis:
    return buchberger(saturation_generators(H))


def pommaret_basis_of(ideal: IdealInput) -> PommaretBasis:
    """Pommaret basis in the given coordinates (raises NotQuasiStable otherwise)."""
    return polynomial_pommaret_basis(buchberger(ideal.generators))


def is_pommaret_basis(polys: Sequence[Polynomial]) -> bool:
    """True iff the leading terms are involutively autoreduced and every
    non-multiplicative prolongation reduces to zero involutively."""
    polys = list(polys)
    if not polys:
        return False
    H = PommaretBasis(polys[0].ctx, tuple(polys))
    try:
        H.check_invariants()
    except AssertionError:
        return False
    for h in polys:
        for j in range(1, class_of(h.lm)):
            xj = [0] * H.n
            xj[j - 1] = 1
            if not involutive_normal_form(h.mul_monomial(tuple(xj)), H).is_zero():
                return False
    return True


def standard_pommaret_monomials(J: MonomialIdeal, max_degree: int) -> list[Monomial]:
    """Monomials m of J (degree <= max_degree) with m / x_cls(m) not in J.

    For quasi-stable J this set is its Pommaret basis; used as an independent check.
    """
    out = []
    for d in range(1, max_degree + 1):
        for m in monomials_of_degree(J.ctx.n, d):
            if not J.contains(m):
                continue
            k = class_of(m) - 1
            below = list(m)
            below[k] -= 1
            if not J.contains(tuple(below)):
                out.append(m)
    return sorted(out, key=sort_key, reverse=True)


__all__ = [
    "PommaretBasis",
    "LinearChange",
    "NotQuasiStable",
    "ImproperIdeal",
    "TransformExhausted",
    "is_quasi_stable",
    "quasi_stability_witness",
    "monomial_pommaret_basis",
    "polynomial_pommaret_basis",
    "involutive_normal_form",
    "random_linear_transform",
    "restrict_basis",
    "saturation_basis",
    "saturation_generators",
    "is_pure_power",
]
