"""Seeded random quasi-stable monomial ideals.

An ideal is the sum of pure powers x_1^a_1, ..., x_j^a_j and the Borel closure
(all moves x_l -> x_i with i < l) of a few random monomials.  Both summands are
quasi-stable, hence so is the sum.
"""

from __future__ import annotations

import numpy as np

from .parser import IdealInput
from .poly import MonomialIdeal, Polynomial, VariableContext


def _random_monomial(rng: np.random.Generator, n: int, d: int) -> tuple[int, ...]:
    m = [0] * n
    for _ in range(d):
        m[int(rng.integers(0, n))] += 1
    return tuple(m)


def borel_closure(m: tuple[int, ...]) -> set[tuple[int, ...]]:
    seen = {m}
    stack = [m]
    while stack:
        cur = stack.pop()
        for l in range(len(cur)):
            if not cur[l]:
                continue
            for i in range(l):
                nxt = list(cur)
                nxt[l] -= 1
                nxt[i] += 1
                nxt = tuple(nxt)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def random_quasi_stable_ideal(rng: np.random.Generator, max_n: int = 5, max_degree: int = 6) -> MonomialIdeal:
    n = int(rng.integers(1, max_n + 1))
    ctx = VariableContext.standard(n)
    j = int(rng.integers(0, n + 1))
    gens: set[tuple[int, ...]] = set()
    for i in range(j):
        m = [0] * n
        m[i] = int(rng.integers(1, max_degree + 1))
        gens.add(tuple(m))
    extras = int(rng.integers(0, 3))
    if not gens:
        extras = max(extras, 1)
    for _ in range(extras):
        d = int(rng.integers(1, max_degree + 1))
        gens |= borel_closure(_random_monomial(rng, n, d))
    return MonomialIdeal(ctx, gens)


def as_ideal_input(J: MonomialIdeal, name: str) -> IdealInput:
    gens = [Polynomial.monomial(J.ctx, m) for m in J.generators]
    order = sorted(range(len(gens)), key=lambda i: -gens[i].total_degree)
    return IdealInput(J.ctx, [gens[i] for i in order], name, order)


def random_ideal_inputs(count: int, seed: int = 0, max_n: int = 5, max_degree: int = 6) -> list[IdealInput]:
    rng = np.random.Generator(np.random.PCG64(seed))
    return [
        as_ideal_input(random_quasi_stable_ideal(rng, max_n, max_degree), f"random-{seed}-{i}")
        for i in range(count)
    ]
