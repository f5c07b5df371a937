"""Reduced Groebner bases under degrevlex (Buchberger with both criteria)."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .poly import (
    Monomial,
    Polynomial,
    VariableContext,
    coprime,
    divides,
    heap_key,
    mono_div,
    mono_lcm,
    sort_key,
)


@dataclass(frozen=True)
class GroebnerBasis:
    ctx: VariableContext
    elements: tuple[Polynomial, ...]
    improper: bool = False

    @property
    def max_degree(self) -> int:
        return max_gb_degree(self)

    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def reduce_terms(
    f: Polynomial,
    find: Callable[[Monomial], Polynomial | None],
) -> Polynomial:
    """Full reduction of ``f``: each term is rewritten with ``find(term)`` until none applies."""
    if f.is_zero():
        return f
    acc: dict[Monomial, Fraction] = dict(f.terms)
    heap = [(heap_key(m), m) for m in acc]
    heapq.heapify(heap)
    remainder = []
    while heap:
        _, m = heapq.heappop(heap)
        c = acc.pop(m, None)
        if not c:
            continue
        g = find(m)
        if g is None:
            remainder.append((m, c))
            continue
        gm, gc = g.terms[0]
        q = mono_div(m, gm)
        factor = c / gc
        for tm, tc in g.terms[1:]:
            mm = tuple(a + b for a, b in zip(tm, q))
            old = acc.get(mm)
            if old is None:
                acc[mm] = -factor * tc
                heapq.heappush(heap, (heap_key(mm), mm))
            else:
                new = old - factor * tc
                if new:
                    acc[mm] = new
                else:
                    del acc[mm]
    return Polynomial(f.ctx, remainder, _sorted=True)


def _divisor_finder(basis: Sequence[Polynomial]):
    heads = [(g.lm, g) for g in basis if not g.is_zero()]

    def find(m):
        for lm, g in heads:
            if divides(lm, m):
                return g
        return None

    return find


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    if isinstance(basis, GroebnerBasis):
        basis = basis.elements
    return reduce_terms(f, _divisor_finder(basis))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = mono_lcm(f.lm, g.lm)
    return f.mul_monomial(mono_div(lcm, f.lm), 1 / f.lc) - g.mul_monomial(mono_div(lcm, g.lm), 1 / g.lc)


def interreduce(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced, monic, head-minimal basis sorted by decreasing leading term."""
    polys = [p.monic() for p in polys if not p.is_zero()]
    polys.sort(key=lambda p: sort_key(p.lm))
    minimal: list[Polynomial] = []
    for p in polys:
        if not any(divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        find = _divisor_finder(others)
        head = Polynomial(p.ctx, p.terms[:1], _sorted=True)
        tail = reduce_terms(Polynomial(p.ctx, p.terms[1:], _sorted=True), find)
        out.append(head + tail)
    out.sort(key=lambda p: sort_key(p.lm), reverse=True)
    return out


def buchberger(generators: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced Groebner basis; pairs are taken by smallest lcm (degree first, then degrevlex)."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ctx = gens[0].ctx
    for g in gens:
        if g.is_constant():
            return GroebnerBasis(ctx, (Polynomial.constant(ctx, 1),), improper=True)

    basis: list[Polynomial] = []
    heads: list[Monomial] = []
    alive: list[bool] = []
    pairs: list = []
    pending: set[tuple[int, int]] = set()
    created: set[tuple[int, int]] = set()

    def add(p: Polynomial):
        k = len(basis)
        basis.append(p.monic())
        heads.append(p.lm)
        alive.append(True)
        for i in range(k):
            if not alive[i]:
                continue
            lcm = mono_lcm(heads[i], heads[k])
            heapq.heappush(pairs, (sort_key(lcm), i, k, lcm))
            pending.add((i, k))
            created.add((i, k))
        # elements whose head is now redundant stay for pair bookkeeping only
        for i in range(k):
            if alive[i] and divides(heads[k], heads[i]):
                alive[i] = False

    def chain_skip(i: int, j: int, lcm: Monomial) -> bool:
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if not divides(heads[k], lcm):
                continue
            ik, jk = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if ik in created and jk in created and ik not in pending and jk not in pending:
                return True
        return False

    for g in sorted(gens, key=lambda p: sort_key(p.lm)):
        g = normal_form(g, [b for b, a in zip(basis, alive) if a])
        if g.is_zero():
            continue
        if g.is_constant():
            return GroebnerBasis(ctx, (Polynomial.constant(ctx, 1),), improper=True)
        add(g)

    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        pending.discard((i, j))
        if coprime(heads[i], heads[j]):
            continue
        if chain_skip(i, j, lcm):
            continue
        r = normal_form(s_polynomial(basis[i], basis[j]), [b for b, a in zip(basis, alive) if a])
        if r.is_zero():
            continue
        if r.is_constant():
            return GroebnerBasis(ctx, (Polynomial.constant(ctx, 1),), improper=True)
        add(r)

    reduced = interreduce([b for b, a in zip(basis, alive) if a])
    return GroebnerBasis(ctx, tuple(reduced))


def ideal_membership(f: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(f, G.elements).is_zero()


def max_gb_degree(G: GroebnerBasis) -> int:
    if G.improper:
        return 0
    return max((g.total_degree for g in G.elements), default=0)


def is_groebner(polys: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero.

    Pairs with coprime heads are skipped, as are pairs (a, b) admitting a third
    head dividing lcm(a, b) whose lcms with a and b are proper divisors of it.
    """
    polys = [p for p in polys if not p.is_zero()]
    lms = [p.lm for p in polys]
    for a in range(len(polys)):
        for b in range(a + 1, len(polys)):
            if coprime(lms[a], lms[b]):
                continue
            l = mono_lcm(lms[a], lms[b])
            if any(
                divides(lms[c], l) and mono_lcm(lms[a], lms[c]) != l and mono_lcm(lms[b], lms[c]) != l
                for c in range(len(polys))
                if c != a and c != b
            ):
                continue
            if not normal_form(s_polynomial(polys[a], polys[b]), polys).is_zero():
                return False
    return True
