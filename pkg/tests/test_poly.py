from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, XYZ, from_sympy, integer_polys, polys, to_sympy
from rank2lnd.coords import LinearChange
from rank2lnd.errors import NonPolynomialRewrite, VariableMismatch
from rank2lnd.poly import (NEG_INF, Polynomial, arith, exact_divide, gcd, homogeneous_components, partial,
                           pow_, rewrite_in_slice_coordinate, substitute, weighted_degree)

X, Y, Z = Polynomial.gens(XYZ)


def test_arith_examples():
    f = P("Y^2 + X*Z")
    assert arith(f, -Y ** 2, "add") == X * Z
    assert arith(f, Polynomial.constant(1, XYZ), "mul") == f
    assert arith(f, X, "mul") == P("X*Y^2 + X^2*Z")
    assert arith(f, f, "sub").is_zero()


def test_arith_rejects_mismatched_rings():
    with pytest.raises(VariableMismatch):
        P("Y^2 + X*Z") + P("X", ("X", "Y"))


def test_zero_coefficients_are_dropped():
    f = Polynomial(XYZ, {(1, 0, 0): 0, (0, 1, 0): Fraction(2, 4)})
    assert f.terms == {(0, 1, 0): Fraction(1, 2)}
    assert Polynomial(XYZ, {(0, 0, 0): 0}).is_zero()


def test_pow_examples():
    f = P("Y^2 + X*Z")
    assert pow_(f, 0) == 1
    assert pow_(f, 2) == P("Y^4 + 2*X*Y^2*Z + X^2*Z^2")
    assert pow_(X, 3) == P("X^3")


def test_partial_examples():
    assert partial(P("Y^2 + X*Z"), "Z") == X
    f = P("(Y^2+X*Z)^2 + X^3*Y")
    assert partial(f, "Y") == 4 * Y * (Y ** 2 + X * Z) + X ** 3
    assert partial(Y ** 3, "X").is_zero()
    with pytest.raises(VariableMismatch):
        partial(X, "W")


def test_weighted_degree_examples():
    assert weighted_degree(P("Y^2 + X*Z"), (1, 1, 1)) == 2
    assert weighted_degree(P("Y^4 + 2*X*Y^2*Z + X^2*Z^2"), (0, 1, 2)) == 4
    assert weighted_degree(Polynomial.zero(XYZ), (1, 2, 3)) == NEG_INF


def test_homogeneous_components_examples():
    comps = homogeneous_components(P("(Y^2+X*Y+X*Z)^2 + X^3*Y"), (0, 1, 2))
    assert max(comps) == 4
    assert comps[4] == P("Y^4 + 2*X*Y^2*Z + X^2*Z^2")
    assert list(homogeneous_components(P("Y^2 + X*Z"), (1, 1, 1))) == [2]
    assert sorted(homogeneous_components(P("X + Y^2"), (1, 1, 1))) == [1, 2]


def test_substitute_examples():
    f = P("Y^2 + X*Z")
    assert substitute(f, {"Z": Z * 1}) == f
    g = P("Z1^2 + X^3*Y", ("X", "Y", "Z1"))
    assert substitute(g, {"Z1": Y ** 2 + X * Z}, XYZ) == P("(Y^2+X*Z)^2 + X^3*Y")
    assert substitute(f, {v: Polynomial.variable(v, XYZ) for v in XYZ}) == f


def test_rewrite_in_slice_coordinate_examples():
    t_def = P("Y^2 + X*Z")
    g = rewrite_in_slice_coordinate(P("(Y^2+X*Z)^2 + X^3*Y"), t_def, 2)
    assert g == P("T^2 + X^3*Y", ("X", "Y", "T"))
    with pytest.raises(NonPolynomialRewrite):
        rewrite_in_slice_coordinate(Z, t_def, 2)
    assert rewrite_in_slice_coordinate(X, t_def, 2) == P("X", ("X", "Y", "T"))


@given(integer_polys(), st.integers(1, 2))
@settings(max_examples=40, deadline=None)
def test_rewrite_then_substitute_is_identity(h, p):
    t_def = P("Y^3 + X*Y^2 + X^2*Z")
    f = substitute(h, {"Z": t_def})  # a polynomial in X, Y and the slice coordinate
    g = rewrite_in_slice_coordinate(f, t_def, 3)
    assert g.substitute({"T": t_def}, XYZ) == f


def test_gcd_examples():
    assert gcd(P("X^2*Y"), P("X*Y^2")) == P("X*Y")
    assert gcd(P("2*X*(Y^2+X*Z)"), P("4*Y*(Y^2+X*Z) + X^3")) == 1
    assert gcd(P("-2*Y^2 - 2*X*Z"), Polynomial.zero(XYZ)) == P("Y^2 + X*Z")


def test_exact_divide_examples():
    assert exact_divide(P("X*Y^2 + X^2*Z"), X) == P("Y^2 + X*Z")
    assert exact_divide(P("Y^2 + X*Z"), X) is None
    assert exact_divide(P("Y^4 + 2*X*Y^2*Z + X^2*Z^2"), P("Y^2 + X*Z")) == P("Y^2 + X*Z")
    with pytest.raises(ZeroDivisionError):
        exact_divide(X, Polynomial.zero(XYZ))


def test_printer_uses_graded_order():
    assert str(P("X^3*Y + X^2*Z^2 + 2*X*Y^2*Z + Y^4")) == "Y^4 + 2*X*Y^2*Z + X^2*Z^2 + X^3*Y"
    assert str(P("1/2*X - 3")) == "1/2*X - 3"
    assert str(Polynomial.zero(XYZ)) == "0"


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f - f == 0


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_product_matches_sympy(f, g):
    assert f * g == from_sympy(to_sympy(f) * to_sympy(g))


@given(polys(), polys(), st.tuples(*(st.integers(0, 3) for _ in XYZ)))
@settings(max_examples=60, deadline=None)
def test_weighted_degree_is_additive(f, g, w):
    if f.is_zero() or g.is_zero():
        return
    assert weighted_degree(f * g, w) == weighted_degree(f, w) + weighted_degree(g, w)


@given(polys(), st.tuples(*(st.integers(0, 2) for _ in XYZ)))
@settings(max_examples=40, deadline=None)
def test_components_sum_back(f, w):
    comps = homogeneous_components(f, w)
    total = Polynomial.zero(XYZ)
    for deg, comp in comps.items():
        assert comp.is_homogeneous(w) and weighted_degree(comp, w) == deg
        total = total + comp
    assert total == f


@given(polys())
@settings(max_examples=40, deadline=None)
def test_linear_change_round_trip(f):
    change = LinearChange.from_rows([[2, 0, 0], [1, -1, 3], [0, 1, 1]], XYZ)
    assert change.to_old(change.to_new(f)) == f
    assert change.to_new(change.to_old(f)) == f


@given(integer_polys(), integer_polys(), integer_polys())
@settings(max_examples=40, deadline=None)
def test_gcd_properties(f, g, h):
    if f.is_zero() and g.is_zero():
        return
    d = gcd(f, g)
    assert exact_divide(f, d) is not None and exact_divide(g, d) is not None
    expected = from_sympy(sympy.gcd(to_sympy(f), to_sympy(g)))
    assert d == expected.normalized()
    if not h.is_zero():
        assert gcd(f * h, g * h) == (d * h).normalized()


@given(integer_polys(), integer_polys())
@settings(max_examples=40, deadline=None)
def test_exact_divide_recovers_factor(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f
