"""Derivations on a polynomial ring given by their values on the variables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .coords import LinearChange, linear_coefficients, linear_form
from .errors import (CapExceeded, NotInKernel, NotJacobian, RankAssumptionViolated, VariableMismatch,
                     ZeroDerivation)
from .poly import NEG_INF, Polynomial, gcd_many

DEFAULT_CAP = 64


@dataclass(frozen=True)
class Derivation:
    variables: tuple[str, ...]
    images: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.images) != len(self.variables):
            raise ValueError("one image per variable is required")
        for im in self.images:
            if im.variables != self.variables:
                raise VariableMismatch(f"image {im} is over {im.variables}, expected {self.variables}")

    @classmethod
    def from_images(cls, images: Mapping[str, Polynomial] | Sequence[Polynomial],
                    variables: Sequence[str] | None = None) -> Derivation:
        if isinstance(images, Mapping):
            variables = tuple(variables or images)
            zero = Polynomial.zero(variables)
            return cls(variables, tuple(images.get(v, zero) for v in variables))
        images = tuple(images)
        return cls(tuple(variables or images[0].variables), images)

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Derivation:
        variables = tuple(variables)
        return cls(variables, tuple(Polynomial.zero(variables) for _ in variables))

    @classmethod
    def partial(cls, var: str, variables: Sequence[str]) -> Derivation:
        variables = tuple(variables)
        one = Polynomial.constant(1, variables)
        zero = Polynomial.zero(variables)
        return cls(variables, tuple(one if v == var else zero for v in variables))

    def image(self, var: str) -> Polynomial:
        try:
            return self.images[self.variables.index(var)]
        except ValueError:
            raise VariableMismatch(f"unknown variable {var!r}") from None

    def is_zero(self) -> bool:
        return all(im.is_zero() for im in self.images)

    def scale(self, c: Fraction | int | Polynomial) -> Derivation:
        return Derivation(self.variables, tuple(im * c for im in self.images))

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply(self, f)

    def as_dict(self) -> dict[str, str]:
        return {v: str(im) for v, im in zip(self.variables, self.images)}

    def __str__(self) -> str:
        return "D(" + ", ".join(f"{v} -> {im}" for v, im in zip(self.variables, self.images)) + ")"


@dataclass(frozen=True)
class KernelPair:
    x: Polynomial
    p: Polynomial
    scale: Fraction = Fraction(1)

    def derivation(self) -> Derivation:
        return jacobian_derivation(self.x, self.p).scale(self.scale)


@dataclass(frozen=True)
class DegDReport:
    value: int | float
    witness: Polynomial


def apply(D: Derivation, f: Polynomial) -> Polynomial:
    if f.variables != D.variables:
        raise VariableMismatch(f"polynomial over {f.variables} but derivation over {D.variables}")
    out = Polynomial.zero(D.variables)
    for v, im in zip(D.variables, D.images):
        if im.is_zero():
            continue
        df = f.partial(v)
        if not df.is_zero():
            out = out + df * im
    return out


def jacobian_derivation(*fs: Polynomial) -> Derivation:
    """The derivation ``g -> det d(f1, ..., f_{n-1}, g) / d(x1, ..., xn)``."""
    if not fs:
        raise ValueError("need at least one polynomial")
    variables = fs[0].variables
    n = len(variables)
    if len(fs) != n - 1:
        raise ValueError(f"a Jacobian derivation on {n} variables needs {n - 1} polynomials")
    if n == 2:
        (f,) = fs
        x, y = variables
        return Derivation(variables, (-f.partial(y), f.partial(x)))
    if n == 3:
        f, g = fs
        x, y, z = variables
        fx, fy, fz = f.partial(x), f.partial(y), f.partial(z)
        gx, gy, gz = g.partial(x), g.partial(y), g.partial(z)
        return Derivation(variables, (fy * gz - fz * gy, fz * gx - fx * gz, fx * gy - fy * gx))
    raise ValueError("only 2 or 3 variables are supported")


def iterate(D: Derivation, f: Polynomial, n: int) -> Polynomial:
    for _ in range(n):
        if f.is_zero():
            break
        f = apply(D, f)
    return f


def deg_d(D: Derivation, f: Polynomial, cap: int = DEFAULT_CAP) -> DegDReport:
    """Smallest ``n`` with ``D^(n+1) f == 0``, and the last nonzero iterate ``D^n f``."""
    if cap < 1:
        raise ValueError("cap must be positive")
    if f.is_zero():
        return DegDReport(NEG_INF, f)
    current = f
    for n in range(cap + 1):
        nxt = apply(D, current)
        if nxt.is_zero():
            return DegDReport(n, current)
        current = nxt
    raise CapExceeded(f"D^{cap + 1} of {f} is nonzero", cap=cap)


@dataclass(frozen=True)
class NilpotencyProbe:
    status: str  # "yes" or "cap-exceeded"
    degrees: dict

    @property
    def ok(self) -> bool:
        return self.status == "yes"


def nilpotency_probe(D: Derivation, cap: int = DEFAULT_CAP) -> NilpotencyProbe:
    degrees = {}
    for v in D.variables:
        try:
            degrees[v] = deg_d(D, Polynomial.variable(v, D.variables), cap).value
        except CapExceeded:
            degrees[v] = None
            return NilpotencyProbe("cap-exceeded", degrees)
    return NilpotencyProbe("yes", degrees)


def kernel_membership(D: Derivation, f: Polynomial) -> bool:
    return apply(D, f).is_zero()


def is_local_slice(D: Derivation, r: Polynomial) -> tuple[bool, Polynomial]:
    dr = apply(D, r)
    return (not dr.is_zero() and apply(D, dr).is_zero()), dr


def homogeneity_degree(D: Derivation, weights: Sequence[int] | None = None) -> int | None:
    """Degree ``d`` with ``deg D(v) = w(v) + d`` for every nonzero image.

    Returns ``None`` when ``D`` is not homogeneous, and also for the zero
    derivation, which has no well-defined degree.
    """
    if weights is None:
        weights = (1,) * len(D.variables)
    degree = None
    for w, im in zip(weights, D.images):
        if im.is_zero():
            continue
        comps = im.homogeneous_components(weights)
        if len(comps) != 1:
            return None
        d = next(iter(comps)) - w
        if degree is None:
            degree = d
        elif degree != d:
            return None
    return degree


def is_irreducible(D: Derivation) -> bool:
    if D.is_zero():
        raise ZeroDerivation("irreducibility is undefined for the zero derivation")
    return gcd_many(D.images).is_constant()


def linear_kernel_elements(D: Derivation) -> list[Polynomial]:
    """Basis of the linear forms annihilated by ``D``, each with primitive integer coefficients."""
    n = len(D.variables)
    monos = sorted({e for im in D.images for e in im.terms})
    rows = [[im.coefficient(e) for im in D.images] for e in monos]
    basis = linalg.nullspace(rows, n)
    forms = [linear_form(v, D.variables).normalized() for v in basis]
    return sorted(forms, key=lambda f: [-abs(c) for c in linear_coefficients(f)])


def reduce_mod_variable(D: Derivation, x: str | Polynomial) -> Derivation:
    """Induced derivation on the ring with ``x`` set to zero."""
    if isinstance(x, Polynomial):
        supp = x.support_variables()
        if len(x) != 1 or len(supp) != 1 or x.total_degree() != 1:
            raise ValueError(f"{x} is not a ring variable")
        x = supp[0]
    D.image(x)
    xp = Polynomial.variable(x, D.variables)
    if not kernel_membership(D, xp):
        raise NotInKernel(f"{x} is not in the kernel of the derivation")
    rest = tuple(v for v in D.variables if v != x)
    images = tuple(D.image(v).substitute({x: 0}).embed(rest) for v in rest)
    return Derivation(rest, images)


# -- coordinate changes and Jacobian presentations ---------------------------


def transform(D: Derivation, change: LinearChange) -> Derivation:
    """The same derivation written in the new variables of ``change``."""
    if change.source != D.variables:
        raise VariableMismatch("linear change does not start from the derivation's ring")
    images = []
    for form in change.forms():
        images.append(change.to_new(apply(D, form)))
    return Derivation(change.target, tuple(images))


def scalar_ratio(D: Derivation, E: Derivation) -> Fraction | None:
    """``c`` with ``D == c * E``, or ``None`` if no such scalar exists (``E`` nonzero)."""
    if D.variables != E.variables:
        raise VariableMismatch("derivations live on different rings")
    ratio = None
    for a, b in zip(D.images, E.images):
        if b.is_zero():
            if not a.is_zero():
                return None
            continue
        e, c = b.leading_term()
        r = a.coefficient(e) / c
        if ratio is None:
            ratio = r
        elif ratio != r:
            return None
        if a != b.scale(r):
            return None
    return ratio


def unique_kernel_variable(D: Derivation) -> Polynomial:
    """The linear kernel form of a rank-2 homogeneous derivation, up to scale."""
    forms = linear_kernel_elements(D)
    if len(forms) == 0:
        raise RankAssumptionViolated("no linear form is annihilated; the input is not of rank 2 in linear coordinates")
    if len(forms) > 1:
        raise RankAssumptionViolated(
            f"{len(forms)} independent linear forms are annihilated; rank is at most 1",
            forms=[str(f) for f in forms])
    return forms[0]


def complete_basis(forms: Sequence[Polynomial]) -> list[Polynomial]:
    """Extend independent linear forms by standard variables, in ring order."""
    variables = forms[0].variables
    rows = [linear_coefficients(f) for f in forms]
    out = list(forms)
    for i, v in enumerate(variables):
        if len(out) == len(variables):
            break
        cand = [Fraction(int(i == j)) for j in range(len(variables))]
        if linalg.rank(rows + [cand]) > len(rows):
            rows.append(cand)
            out.append(Polynomial.variable(v, variables))
    return out


def kernel_generator_from_images(D: Derivation, x: Polynomial) -> tuple[Polynomial, Fraction]:
    """Recover ``P`` with ``D == gamma * Jacobian(x, P)`` for a homogeneous ``D`` on three variables.

    Integrates the images in coordinates where ``x`` is the first variable. The
    result is unique up to adding a multiple of a power of ``x``, which is dropped.
    """
    if len(D.variables) != 3:
        raise ValueError("kernel generator recovery needs three variables")
    if not kernel_membership(D, x):
        raise NotInKernel(f"{x} is not annihilated by the derivation")
    basis = complete_basis([x])
    change = LinearChange.from_forms(basis, ("_x", "_y", "_z"))
    Dn = transform(D, change)
    a, b = Dn.images[1], Dn.images[2]
    # want P_y = b, P_z = -a; need a_y + b_z = 0
    if not (a.partial("_y") + b.partial("_z")).is_zero():
        raise NotJacobian("images are not those of a Jacobian derivation with respect to the kernel form")
    P = _integrate(b, "_y") + _integrate(-a.substitute({"_y": 0}), "_z")
    if P.is_zero():
        raise NotJacobian("recovered kernel generator is zero")
    P = P.normalized()
    P_old = change.to_old(P)
    gamma = scalar_ratio(D, jacobian_derivation(x, P_old))
    if gamma is None:
        raise NotJacobian("derivation is not a scalar multiple of the Jacobian derivation")
    return P_old, gamma


def _integrate(f: Polynomial, var: str) -> Polynomial:
    i = f.index(var)
    out = {}
    for e, c in f.items():
        out[e[:i] + (e[i] + 1,) + e[i + 1:]] = c / (e[i] + 1)
    return Polynomial(f.variables, out)
