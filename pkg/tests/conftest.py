from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from rank2lnd.parse import parse_polynomial
from rank2lnd.poly import Polynomial

XYZ = ("X", "Y", "Z")


def P(text: str, variables=XYZ) -> Polynomial:
    return parse_polynomial(text, variables)


def to_sympy(f: Polynomial):
    return sympy.sympify(str(f).replace("^", "**")) if not f.is_zero() else sympy.Integer(0)


def from_sympy(expr, variables=XYZ) -> Polynomial:
    poly = sympy.Poly(sympy.expand(expr), *sympy.symbols(variables))
    return Polynomial(variables, {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.tuples(*(st.integers(0, 3) for _ in XYZ))


@st.composite
def polys(draw, max_terms: int = 4):
    terms = draw(st.dictionaries(exponents, coefficients, max_size=max_terms))
    return Polynomial(XYZ, terms)


@st.composite
def integer_polys(draw, max_terms: int = 3):
    terms = draw(st.dictionaries(exponents, st.integers(-4, 4), max_size=max_terms))
    return Polynomial(XYZ, terms)
