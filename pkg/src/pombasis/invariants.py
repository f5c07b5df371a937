"""Closed-form ideal invariants read off a Pommaret basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .groebner import GroebnerBasis
from .pommaret import ImproperIdeal, PommaretBasis
from .poly import is_pure_power


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is zero whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


# -- univariate integer polynomials (ascending coefficient lists) -----------------


def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(p: list, q: list) -> list:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _pmul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _one_minus_t_power(e: int) -> list:
    return [(-1) ** i * comb(e, i) for i in range(e + 1)]


def divide_one_minus_t(p: list) -> list:
    """Exact quotient p / (1 - t); raises if p(1) != 0."""
    p = _trim(p)
    if sum(p) != 0:
        raise ArithmeticError("polynomial is not divisible by (1 - t)")
    q, run = [], 0
    for c in p[:-1]:
        run += c
        q.append(run)
    return _trim(q)


def evaluate(p, t):
    return sum(c * t**i for i, c in enumerate(p))


# -- records ------------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple[int, ...]
    dimension: int

    def __post_init__(self):
        if not self.numerator or self.numerator[-1] == 0:
            raise ValueError("numerator must have a nonzero leading coefficient")
        if sum(self.numerator) == 0:
            raise ValueError("numerator vanishes at t = 1")

    @property
    def numerator_degree(self) -> int:
        return len(self.numerator) - 1

    def coefficient(self, t: int) -> int:
        """Coefficient of t^t in N(t) / (1 - t)^D, i.e. HF(t)."""
        D = self.dimension
        if D == 0:
            return self.numerator[t] if t < len(self.numerator) else 0
        return sum(a * binom(t - i + D - 1, D - 1) for i, a in enumerate(self.numerator) if i <= t)


@dataclass(frozen=True)
class IdealInvariants:
    dimension: int
    degree: int
    regularity: int
    depth: int
    satiety: int
    hilbert_regularity: int
    gb_degree: int | None = None
    hilbert_numerator: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "degree": self.degree,
            "regularity": self.regularity,
            "depth": self.depth,
            "satiety": self.satiety,
            "hilbert_regularity": self.hilbert_regularity,
            "gb_degree": self.gb_degree,
            "hilbert_numerator": list(self.hilbert_numerator),
        }


def _require_proper(H: PommaretBasis):
    if not H.is_proper:
        raise ImproperIdeal("invariants are only defined for proper ideals")


# -- structural invariants ---------------------------------------------------------


def dimension(H: PommaretBasis) -> int:
    _require_proper(H)
    pure = set()
    for m in H.leading_monomials:
        if is_pure_power(m):
            pure.add(next(i for i, e in enumerate(m) if e) + 1)
    j = 0
    while j + 1 in pure:
        j += 1
    return H.n - j


def depth(H: PommaretBasis) -> int:
    _require_proper(H)
    return H.n - max(H.classes, default=0)


def regularity(H: PommaretBasis) -> int:
    _require_proper(H)
    return max(H.degrees, default=0)


def satiety(H: PommaretBasis) -> int:
    _require_proper(H)
    return max((d for d, c in zip(H.degrees, H.classes) if c == H.n), default=0)


# -- Hilbert data ----------------------------------------------------------------------


def volume_function(H: PommaretBasis, t: int) -> int:
    """dim_k I_t from the disjoint involutive cones."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    return sum(
        binom(t - c + w - 1, t - c) for c, w in zip(H.degrees, H.multiplicative_counts) if c <= t
    )


def hilbert_function(H: PommaretBasis, t: int) -> int:
    return binom(H.n - 1 + t, t) - volume_function(H, t)


def series_numerator_times_power(H: PommaretBasis) -> list[int]:
    """1 - sum_h (1 - t)^{n_h} t^{c_h}: the Hilbert series numerator over (1 - t)^n."""
    p = [1]
    for c, nonmult in zip(H.degrees, H.nonmultiplicative_counts):
        term = [0] * c + _one_minus_t_power(nonmult)
        p = _padd(p, [-x for x in term])
    return _trim(p)


def hilbert_series(H: PommaretBasis) -> HilbertSeries:
    _require_proper(H)
    D = dimension(H)
    p = series_numerator_times_power(H)
    for _ in range(H.n - D):
        p = divide_one_minus_t(p)
    if not p or sum(p) == 0:
        raise ArithmeticError("Hilbert series numerator vanishes at t = 1")
    return HilbertSeries(tuple(p), D)


def numerator_coefficients_direct(H: PommaretBasis, D: int | None = None) -> list[int]:
    """Numerator coefficients a_i computed term by term from the basis data."""
    _require_proper(H)
    if D is None:
        D = dimension(H)
    n = H.n
    if D == n:
        return [1]
    data = list(zip(H.degrees, H.multiplicative_counts))
    top = max([c - w + D for c, w in data] + [0])
    coeffs = []
    for i in range(top + 1):
        a = binom(n - D + i - 1, n - D - 1)
        for c, w in data:
            if c > i:
                continue
            if w <= D:
                a -= (-1) ** (i - c) * binom(D - w, i - c)
            else:
                a -= binom(w - D + i - c - 1, w - D - 1)
        coeffs.append(a)
    return _trim(coeffs)


def numerator_degree_bound(H: PommaretBasis, D: int | None = None) -> int:
    if D is None:
        D = dimension(H)
    return max(c - w + D for c, w in zip(H.degrees, H.multiplicative_counts))


def _binomial_polynomial(shift: int, k: int) -> list[Fraction]:
    """C(t + shift, k) as an ascending coefficient list in t."""
    p = [Fraction(1)]
    for i in range(k):
        p = _pmul(p, [Fraction(shift - i), Fraction(1)])
    return [Fraction(c) / factorial(k) for c in p]


def hilbert_polynomial(H: PommaretBasis) -> list[Fraction]:
    """HP(t) = VP_P(t) - VP_I(t), ascending rational coefficients (empty list = 0)."""
    _require_proper(H)
    n = H.n
    hp = _binomial_polynomial(n - 1, n - 1)
    for c, w in zip(H.degrees, H.multiplicative_counts):
        cone = _binomial_polynomial(w - 1 - c, w - 1)
        hp = _padd(hp, [-x for x in cone])
    return _trim(hp)


def hilbert_regularity(series: HilbertSeries) -> int:
    return max(0, series.numerator_degree - series.dimension + 1)


def bound_hilbert_regularity(H: PommaretBasis) -> int:
    return max([0] + [c - w + 1 for c, w in zip(H.degrees, H.multiplicative_counts)])


def max_degree_max_class_generator(H: PommaretBasis):
    """Index of an element with both maximal degree and maximal class, or None."""
    top_deg, top_cls = max(H.degrees), max(H.classes)
    for i, (c, d) in enumerate(zip(H.classes, H.degrees)):
        if c == top_cls and d == top_deg:
            return i
    return None


# -- degree -------------------------------------------------------------------------------


def degree_via_formula(H: PommaretBasis, D: int | None = None) -> int:
    """Signed binomial sum over the elements with D <= |X_P(h)| <= D + deg(h)."""
    _require_proper(H)
    if not H.elements:
        return 1
    if D is None:
        D = dimension(H)
    total = 0
    for c, w in zip(H.degrees, H.multiplicative_counts):
        if D <= w <= D + c:
            total += (-1) ** (w - D + 1) * comb(c, w - D)
    return total


def degree(series: HilbertSeries) -> int:
    value = sum(series.numerator)
    if value <= 0:
        raise ImproperIdeal("degree must be positive for a proper ideal")
    return value


def is_noether_position(G: GroebnerBasis, D: int) -> bool:
    if G.improper:
        raise ImproperIdeal("the unit ideal has no Noether position")
    n = G.ctx.n
    pure = {next(i for i, e in enumerate(m) if e) + 1 for m in G.leading_monomials() if is_pure_power(m)}
    return all(i in pure for i in range(1, n - D + 1))


def compute_invariants(H: PommaretBasis, gb_degree: int | None = None) -> IdealInvariants:
    hs = hilbert_series(H)
    return IdealInvariants(
        dimension=hs.dimension,
        degree=degree(hs),
        regularity=regularity(H),
        depth=depth(H),
        satiety=satiety(H),
        hilbert_regularity=hilbert_regularity(hs),
        gb_degree=gb_degree,
        hilbert_numerator=hs.numerator,
    )
