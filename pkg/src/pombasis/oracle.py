"""Brute-force linear-algebra checks, independent of Pommaret bases."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from .poly import Monomial, MonomialIdeal, Polynomial, divides, monomials_of_degree


class DifferenceWindowError(ValueError):
    """The finite-difference window is not yet constant; start higher."""


# -- rank -------------------------------------------------------------------------


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(cols):
        if rank == rows:
            break
        p = next((r for r in range(rank, rows) if a[r][c]), None)
        if p is None:
            continue
        a[rank], a[p] = a[p], a[rank]
        piv = a[rank][c]
        for r in range(rank + 1, rows):
            arc = a[r][c]
            row_r, row_p = a[r], a[rank]
            for k in range(c + 1, cols):
                row_r[k] = (piv * row_r[k] - arc * row_p[k]) // prev
            row_r[c] = 0
        prev = piv
        rank += 1
    return rank


def sparse_rank(rows: Sequence[dict[int, int]]) -> int:
    """Rank of a sparse integer matrix (rows as column -> value maps).

    Incremental fraction-free echelon form; every reduced row is divided by
    the gcd of its entries so the integers stay small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[col] = {c: v // g for c, v in row.items()}
                break
            a, b = piv[col], row[col]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


# -- Macaulay matrices -----------------------------------------------------------------


def _integer_coefficients(f: Polynomial) -> list[tuple[Monomial, int]]:
    den = 1
    for _, c in f.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    return [(m, int(c * den)) for m, c in f.terms]


def macaulay_rows(generators: Sequence[Polynomial], t: int) -> tuple[list[Monomial], list[dict[int, int]]]:
    """Rows x^beta * f_i (|beta| = t - deg f_i) over the degree-t monomial columns."""
    n = generators[0].ctx.n
    columns = monomials_of_degree(n, t)
    index = {m: i for i, m in enumerate(columns)}
    rows = []
    for f in generators:
        d = f.total_degree
        if d > t:
            continue
        coeffs = _integer_coefficients(f)
        for beta in monomials_of_degree(n, t - d):
            rows.append({index[tuple(a + b for a, b in zip(m, beta))]: c for m, c in coeffs})
    return columns, rows


def macaulay_hf(generators: Sequence[Polynomial], t: int) -> int:
    """HF(t) = #monomials of degree t minus rank of the degree-t Macaulay matrix."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    n = generators[0].ctx.n
    columns, rows = macaulay_rows(generators, t)
    return comb(n - 1 + t, t) - sparse_rank(rows)


def macaulay_dense(generators: Sequence[Polynomial], t: int) -> list[list[int]]:
    columns, rows = macaulay_rows(generators, t)
    return [[row.get(j, 0) for j in range(len(columns))] for row in rows]


def in_truncated_ideal(f: Polynomial, generators: Sequence[Polynomial]) -> bool:
    """Homogeneous ``f`` lies in I_d iff appending it leaves the Macaulay rank unchanged."""
    if f.is_zero():
        return True
    if not f.homogeneous:
        raise ValueError("membership oracle needs a homogeneous polynomial")
    d = f.total_degree
    columns, rows = macaulay_rows(generators, d)
    index = {m: i for i, m in enumerate(columns)}
    base = sparse_rank(rows)
    extra = {index[m]: c for m, c in _integer_coefficients(f)}
    return sparse_rank(rows + [extra]) == base


def standard_monomial_count(J: MonomialIdeal, t: int) -> int:
    return sum(1 for m in monomials_of_degree(J.ctx.n, t) if not J.contains(m))


def hf_table(generators: Sequence[Polynomial], max_degree: int) -> dict[int, int]:
    return {t: macaulay_hf(generators, t) for t in range(max_degree + 1)}


# -- degree by finite differences -------------------------------------------------------


def forward_difference(values: Sequence[int], order: int) -> list[int]:
    vals = list(values)
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def degree_by_differences(table: dict[int, int], D: int, start: int) -> int:
    """Degree from the (D-1)-th forward difference of HF, constant on start..start+D+1."""
    needed = range(start, start + D + 2)
    missing = [t for t in needed if t not in table]
    if missing:
        raise ValueError(f"table lacks degrees {missing}")
    if D == 0:
        if any(table[t] for t in needed):
            raise DifferenceWindowError("HF has not vanished; start is below the Hilbert regularity")
        return sum(v for t, v in table.items() if t < start)
    window = forward_difference([table[t] for t in needed], D - 1)
    if len(set(window)) != 1:
        raise DifferenceWindowError(f"difference window {window} is not constant")
    return window[0]


def oracle_dimension_degree(generators: Sequence[Polynomial], max_degree: int = 40, start: int = 0):
    """Search for (D, degree, start) from Macaulay HF values alone.

    D is the smallest order r + 1 such that the r-th difference is constant and
    nonzero over a window of r + 3 values; an eventually vanishing HF gives D = 0.
    """
    n = generators[0].ctx.n
    table: dict[int, int] = {}

    def hf(t):
        if t not in table:
            table[t] = macaulay_hf(generators, t)
        return table[t]

    for s in range(start, max_degree + 1):
        for D in range(0, n + 1):
            window = [hf(t) for t in range(s, s + D + 2)]
            if D == 0:
                if not any(window):
                    for t in range(s):
                        hf(t)
                    return 0, degree_by_differences(table, 0, s), s, table
                continue
            diffs = forward_difference(window, D - 1)
            if len(set(diffs)) == 1 and diffs[0] != 0:
                return D, diffs[0], s, table
    raise DifferenceWindowError("no stable difference window found")


def leading_coefficient_degree(hp: Sequence[Fraction], D: int) -> int:
    """(D-1)! times the leading coefficient of the Hilbert polynomial."""
    if D == 0:
        raise ValueError("use the series sum for zero-dimensional ideals")
    return int(factorial(D - 1) * hp[D - 1])
