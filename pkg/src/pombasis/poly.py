"""Exact multivariate polynomials over Q under the degrevlex order.

Monomials are dense exponent tuples ``(a_1, ..., a_n)``; variable ``x_1`` is
the largest and ``x_n`` the smallest, so ``x_1 > x_2 > ... > x_n``.  A
polynomial keeps its terms strictly decreasing in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]
Term = tuple[Monomial, Fraction]

LESS, EQUAL, GREATER = -1, 0, 1


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VariableContext:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def n(self) -> int:
        return len(self.names)

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "VariableContext":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def prefix(self, k: int) -> "VariableContext":
        """Context of the first ``k`` variables."""
        return VariableContext(self.names[:k])


# -- monomial helpers ---------------------------------------------------------


def degree(m: Monomial) -> int:
    return sum(m)


@lru_cache(maxsize=1 << 18)
def sort_key(m: Monomial) -> tuple:
    """Key that increases with the degrevlex order."""
    return (sum(m), tuple(-e for e in reversed(m)))


@lru_cache(maxsize=1 << 18)
def heap_key(m: Monomial) -> tuple:
    """Key that decreases with the degrevlex order (for min-heaps)."""
    return (-sum(m), m[::-1])


def cmp_degrevlex(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise ContextMismatch("monomials live in rings of different size")
    da, db = sum(a), sum(b)
    if da != db:
        return GREATER if da > db else LESS
    for ea, eb in zip(reversed(a), reversed(b)):
        if ea != eb:
            return LESS if ea > eb else GREATER
    return EQUAL


def divides(b: Monomial, a: Monomial) -> bool:
    return all(x <= y for x, y in zip(b, a))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient ``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def class_of(m: Monomial) -> int:
    """Largest (1-based) index of a variable occurring in ``m``."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    raise ValueError("the constant monomial has no class")


def multiplicative_variables(m: Monomial) -> frozenset[int]:
    return frozenset(range(class_of(m), len(m) + 1))


def pommaret_divides(b: Monomial, a: Monomial) -> bool:
    """True iff ``b`` divides ``a`` and the cofactor only uses x_cls(b), ..., x_n."""
    if len(a) != len(b):
        raise ContextMismatch("monomials live in rings of different size")
    if not divides(b, a):
        return False
    k = class_of(b) - 1
    return all(a[i] == b[i] for i in range(k))


def is_pure_power(m: Monomial) -> bool:
    return sum(1 for e in m if e) == 1


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All degree-``d`` monomials in ``n`` variables, degrevlex-decreasing."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, slots - 1)

    if n == 0:
        return [()] if d == 0 else []
    rec([], d, n)
    out.sort(key=sort_key, reverse=True)
    return out


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Minimal generators of the monomial ideal spanned by ``monomials``."""
    ms = sorted(set(monomials), key=sort_key)
    kept: list[Monomial] = []
    for m in ms:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    kept.sort(key=sort_key, reverse=True)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    ctx: VariableContext
    generators: tuple[Monomial, ...]

    def __init__(self, ctx: VariableContext, generators: Iterable[Monomial]):
        gens = tuple(minimalize(tuple(g) for g in generators))
        for g in gens:
            if len(g) != ctx.n:
                raise ContextMismatch(f"monomial {g} does not fit {ctx.n} variables")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "generators", gens)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    @property
    def is_proper(self) -> bool:
        return not any(sum(g) == 0 for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)


# -- polynomials --------------------------------------------------------------


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable polynomial with terms sorted strictly decreasing in degrevlex."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VariableContext, terms: Iterable[Term] = (), *, _sorted=False):
        self.ctx = ctx
        if _sorted:
            self.terms = tuple(terms)
        else:
            acc: dict[Monomial, Fraction] = {}
            for m, c in terms:
                m = tuple(m)
                if len(m) != ctx.n:
                    raise ContextMismatch(f"monomial {m} does not fit {ctx.n} variables")
                acc[m] = acc.get(m, 0) + _as_fraction(c)
            self.terms = tuple(
                sorted(((m, c) for m, c in acc.items() if c), key=lambda t: sort_key(t[0]), reverse=True)
            )
        self._hash = None

    # construction
    @classmethod
    def from_dict(cls, ctx: VariableContext, d: Mapping[Monomial, object]) -> "Polynomial":
        return cls(ctx, d.items())

    @classmethod
    def monomial(cls, ctx: VariableContext, m: Sequence[int], coeff=1) -> "Polynomial":
        return cls(ctx, [(tuple(m), coeff)])

    @classmethod
    def variable(cls, ctx: VariableContext, i: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        m = [0] * ctx.n
        m[i - 1] = 1
        return cls.monomial(ctx, m)

    @classmethod
    def constant(cls, ctx: VariableContext, c) -> "Polynomial":
        return cls(ctx, [((0,) * ctx.n, c)])

    @classmethod
    def zero(cls, ctx: VariableContext) -> "Polynomial":
        return cls(ctx, (), _sorted=True)

    # basic queries
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.terms))
        return self._hash

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def leading_term(self) -> Term:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def lm(self) -> Monomial:
        """Leading (power product) term LT(f)."""
        return self.leading_term()[0]

    @property
    def lc(self) -> Fraction:
        return self.leading_term()[1]

    @property
    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m, _ in self.terms)

    @property
    def homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_constant(self) -> bool:
        return len(self.terms) == 1 and sum(self.terms[0][0]) == 0

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"{self.ctx.names} vs {other.ctx.names}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.ctx, acc.items())

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, ((m, -c) for m, c in self.terms), _sorted=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.ctx, acc.items())

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.ctx, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.ctx)
        return Polynomial(self.ctx, ((m, k * c) for m, k in self.terms), _sorted=True)

    def mul_monomial(self, u: Monomial, c=1) -> "Polynomial":
        """``c * x^u * self``; degrevlex is multiplicative so order is kept."""
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.ctx)
        return Polynomial(self.ctx, ((mono_mul(m, u), k * c) for m, k in self.terms), _sorted=True)

    def monic(self) -> "Polynomial":
        return self.scale(1 / self.lc)

    def substitute_zero(self, from_index: int) -> "Polynomial":
        """Set x_from_index, ..., x_n to zero; result lives in the first from_index-1 variables."""
        n = self.ctx.n
        if not 1 <= from_index <= n + 1:
            raise ValueError(f"from_index must lie in 1..{n + 1}")
        if from_index == 1:
            raise ValueError("substituting every variable leaves no ring variables")
        k = from_index - 1
        kept = [(m[:k], c) for m, c in self.terms if not any(m[k:])]
        return Polynomial(self.ctx.prefix(k), kept, _sorted=True)

    def exponent_min(self, i: int) -> int:
        """Smallest exponent of x_i (1-based) over the terms."""
        return min(m[i - 1] for m, _ in self.terms)

    def divide_by_variable_power(self, i: int, e: int) -> "Polynomial":
        """Exact division by x_i^e; every term must carry that power."""
        if e == 0:
            return self
        out = []
        for m, c in self.terms:
            if m[i - 1] < e:
                raise ValueError(f"x_{i}^{e} does not divide every term")
            m2 = list(m)
            m2[i - 1] -= e
            out.append((tuple(m2), c))
        return Polynomial(self.ctx, out, _sorted=True)

    def evaluate_linear_change(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute x_i -> images[i-1] (all images in one target context)."""
        if len(images) != self.ctx.n:
            raise ContextMismatch("need one image per variable")
        target = images[0].ctx
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(target, 1)} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        acc: dict[Monomial, Fraction] = {}
        for m, c in self.terms:
            prod = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    prod = prod * power(i, e)
            for mm, cc in prod.terms:
                acc[mm] = acc.get(mm, 0) + cc
        return Polynomial(target, acc.items())

    def __repr__(self):
        from .parser import render_polynomial

        return f"Polynomial({render_polynomial(self)!r})"

    def __str__(self):
        from .parser import render_polynomial

        return render_polynomial(self)


def leading_term(f: Polynomial) -> Term:
    return f.leading_term()


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "subtract":
        return f - g
    if op == "multiply":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute_zero(f: Polynomial, from_index: int) -> Polynomial:
    return f.substitute_zero(from_index)
