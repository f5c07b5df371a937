"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from pombasis.poly import Polynomial, VariableContext, monomials_of_degree

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, n=3, max_degree=3, max_terms=5, homogeneous=False):
    ctx = VariableContext.standard(n)
    if homogeneous:
        d = draw(st.integers(1, max_degree))
        pool = monomials_of_degree(n, d)
    else:
        pool = [m for d in range(max_degree + 1) for m in monomials_of_degree(n, d)]
    mons = draw(st.lists(st.sampled_from(pool), min_size=0, max_size=max_terms, unique=True))
    return Polynomial(ctx, [(m, draw(coefficients)) for m in mons])


@st.composite
def homogeneous_ideals(draw, n=3, max_degree=3, max_gens=3):
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        f = draw(polynomials(n=n, max_degree=max_degree, max_terms=3, homogeneous=True))
        if not f.is_zero():
            gens.append(f)
    if not gens:
        gens.append(Polynomial.variable(VariableContext.standard(n), n) ** 2)
    return gens


def to_sympy(f, symbols):
    import sympy

    expr = sympy.Integer(0)
    for m, c in f.terms:
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(symbols, m):
            term *= s**e
        expr += term
    return sympy.expand(expr)


def from_sympy_poly(p, ctx):
    return Polynomial(ctx, [(tuple(m), Fraction(int(c.p), int(c.q))) for m, c in p.terms()])
