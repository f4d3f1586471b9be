from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import P, XYZ, polys
from rank2lnd.coords import LinearChange
from rank2lnd.derivation import (Derivation, apply, deg_d, homogeneity_degree, is_irreducible, is_local_slice,
                                 jacobian_derivation, kernel_generator_from_images, kernel_membership,
                                 linear_kernel_elements, nilpotency_probe, reduce_mod_variable, scalar_ratio,
                                 transform, unique_kernel_variable)
from rank2lnd.errors import CapExceeded, NotInKernel, RankAssumptionViolated, VariableMismatch, ZeroDerivation
from rank2lnd.poly import NEG_INF, Polynomial

X, Y, Z = Polynomial.gens(XYZ)
D0 = jacobian_derivation(X, P("Y^2 + X*Z"))
D2 = jacobian_derivation(X, P("(Y^2+X*Z)^2 + X^3*Y"))


def images(D):
    return tuple(str(im) for im in D.images)


def test_apply_examples():
    assert apply(D0, Y) == -X
    assert apply(D0, X).is_zero()
    assert apply(D0, P("Y^2 + X*Z")).is_zero()
    with pytest.raises(VariableMismatch):
        apply(D0, P("Y", ("X", "Y")))


def test_jacobian_examples():
    assert D0.images == (0 * X, -X, 2 * Y)
    assert jacobian_derivation(X, X).is_zero()
    assert D2.images == (0 * X, -2 * X * (Y ** 2 + X * Z), 4 * Y * (Y ** 2 + X * Z) + X ** 3)


def test_jacobian_on_two_variables():
    D = jacobian_derivation(P("X^2*Y", ("X", "Y")))
    assert images(D) == ("-X^2", "2*X*Y")


def test_deg_d_examples():
    rep = deg_d(D0, Z)
    assert (rep.value, rep.witness) == (2, -2 * X)
    rep = deg_d(D0, X)
    assert (rep.value, rep.witness) == (0, X)
    rep = deg_d(D2, Z)
    assert (rep.value, rep.witness) == (4, -24 * X ** 9)
    assert deg_d(D0, Polynomial.zero(XYZ)).value == NEG_INF


def test_deg_d_cap():
    semisimple = Derivation.from_images({"Y": Y}, XYZ)
    with pytest.raises(CapExceeded):
        deg_d(semisimple, Y, cap=10)
    with pytest.raises(ValueError):
        deg_d(D0, Y, cap=0)


def test_nilpotency_probe_examples():
    probe = nilpotency_probe(D0, cap=10)
    assert probe.ok and probe.degrees == {"X": 0, "Y": 1, "Z": 2}
    assert nilpotency_probe(Derivation.from_images({"Y": Y}, XYZ), cap=10).status == "cap-exceeded"
    assert nilpotency_probe(Derivation.zero(XYZ)).ok


def test_kernel_membership_examples():
    assert kernel_membership(D0, X ** 3 * P("Y^2 + X*Z"))
    assert not kernel_membership(D0, Y)
    assert kernel_membership(D0, Polynomial.constant(5, XYZ))


def test_local_slice_examples():
    ok, w = is_local_slice(D2, P("Y^2 + X*Z"))
    assert ok and w == X ** 4
    ok, w = is_local_slice(D0, Y)
    assert ok and w == -X
    assert is_local_slice(D0, X)[0] is False


def test_homogeneity_degree_examples():
    assert homogeneity_degree(D0) == 0
    assert homogeneity_degree(D2) == 2
    assert homogeneity_degree(Derivation.from_images({"Y": X + X ** 2}, XYZ)) is None
    assert homogeneity_degree(Derivation.zero(XYZ)) is None


def test_irreducibility_examples():
    assert is_irreducible(D0)
    assert not is_irreducible(D0.scale(X))
    assert is_irreducible(D2)
    with pytest.raises(ZeroDerivation):
        is_irreducible(Derivation.zero(XYZ))


def test_linear_kernel_elements_examples():
    assert linear_kernel_elements(D0) == [X]
    assert len(linear_kernel_elements(Derivation.zero(XYZ))) == 3
    assert sorted(map(str, linear_kernel_elements(Derivation.partial("Z", XYZ)))) == ["X", "Y"]


def test_unique_kernel_variable():
    assert unique_kernel_variable(D2) == X
    with pytest.raises(RankAssumptionViolated):
        unique_kernel_variable(Derivation.partial("Z", XYZ))
    with pytest.raises(RankAssumptionViolated):
        unique_kernel_variable(Derivation.from_images({"X": Y, "Y": Z, "Z": X}, XYZ))


def test_reduce_mod_variable_examples():
    assert images(reduce_mod_variable(D0, "X")) == ("0", "2*Y")
    assert images(reduce_mod_variable(D2, "X")) == ("0", "4*Y^3")
    assert reduce_mod_variable(Derivation.zero(XYZ), "X").is_zero()
    with pytest.raises(NotInKernel):
        reduce_mod_variable(D0, "Y")


def test_kernel_generator_recovery():
    change = LinearChange.from_rows([[1, 0, 0], [2, 1, 1], [0, 1, 2]], XYZ)
    Pn = P("(Y^2+X*Z)^2 + X^3*Y").substitute(dict(zip(XYZ, change.forms())))
    D = jacobian_derivation(X, Pn).scale(Fraction(-3, 2))
    rec, gamma = kernel_generator_from_images(D, X)
    ratio = scalar_ratio(D, jacobian_derivation(X, rec))
    assert ratio == gamma
    assert kernel_membership(D, rec)
    # unique up to scale and a power of X
    diff = rec * (Pn.leading_term()[1] / rec.leading_term()[1]) - Pn
    assert diff.support_variables() in ((), ("X",))


def test_transform_matches_conjugation():
    change = LinearChange.from_rows([[1, 0, 0], [1, 1, 0], [0, 2, 1]], XYZ)
    E = transform(D2, change)
    for form, new_var in zip(change.forms(), XYZ):
        lhs = change.to_new(apply(D2, form))
        assert lhs == E.image(new_var)


@given(polys(), polys())
@settings(max_examples=50, deadline=None)
def test_leibniz(f, g):
    for D in (D0, D2):
        assert apply(D, f * g) == apply(D, f) * g + f * apply(D, g)


@given(polys(max_terms=3), polys(max_terms=3))
@settings(max_examples=30, deadline=None)
def test_deg_d_is_additive(f, g):
    if f.is_zero() or g.is_zero():
        return
    assert deg_d(D0, f * g).value == deg_d(D0, f).value + deg_d(D0, g).value


@given(polys())
@settings(max_examples=50, deadline=None)
def test_homogeneous_derivation_raises_degree(f):
    for comp in f.homogeneous_components((1, 1, 1)).values():
        image = apply(D2, comp)
        if not image.is_zero():
            assert image.is_homogeneous() and image.total_degree() == comp.total_degree() + 2


def test_factorial_closedness_on_kernel_products():
    Pk = P("(Y^2+X*Z)^2 + X^3*Y")
    for f, g in [(X ** 2, Pk), (Pk, Pk + X ** 4), (X + 0, X ** 3 * Pk)]:
        assert kernel_membership(D2, f * g)
        assert kernel_membership(D2, f) and kernel_membership(D2, g)


@given(polys())
@settings(max_examples=30, deadline=None)
def test_jacobian_annihilates_its_arguments(f):
    D = jacobian_derivation(X, f)
    assert apply(D, X).is_zero() and apply(D, f).is_zero()
