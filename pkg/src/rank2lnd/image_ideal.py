"""Generators of the image ideals ``I_n = D^n(B) ∩ ker D``.

For the derivations classified by :mod:`rank2lnd.normal_form` every ``I_n`` is
generated by a power of the kernel variable ``X``. The closed forms are
checked against a direct oracle: ``D^n`` applied to the ``D``-basis element of
``deg_D`` equal to ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .derivation import Derivation, iterate, transform
from .errors import DependenceFound, FormulaOracleMismatch, NotPurePowerOfX, SpanDeficit, UndecidedVerdict
from .normal_form import XYZ, Verdict
from .poly import Polynomial


def trf_exponent(n: int, d: int) -> int:
    if d < 0 or n < 0:
        raise ValueError("need n >= 0 and d >= 0")
    t, r = divmod(n, d + 2)
    return t * (d + 1) ** 2 + r * (d + 1)


def ntrf_split(n: int, p: int, q: int, case: str = "a") -> tuple[int, int, int]:
    """``(r, s, t)`` with ``n = t*p*q + s*p + r`` (case a) or with p and q swapped (case b)."""
    if case == "b":
        p, q = q, p
    elif case != "a":
        raise ValueError(f"case must be 'a' or 'b', got {case!r}")
    tp, r = divmod(n, p)
    t, s = divmod(tp, q)
    return r, s, t


def ntrf_exponent(n: int, p: int, q: int, case: str = "a") -> int:
    r, s, t = ntrf_split(n, p, q, case)
    weight = q if case == "a" else p
    return n * (p * q - 2) + weight * r + s + t


@dataclass(frozen=True)
class DBasisElement:
    exponents: tuple[int, ...]  # (r, t) for Y^r Z^t, or (s, r, t) for Y^s T^r Z^t
    degd: int

    def polynomial(self, t_def: Polynomial | None = None) -> Polynomial:
        X, Y, Z = Polynomial.gens(XYZ)
        if len(self.exponents) == 2:
            r, t = self.exponents
            return Y ** r * Z ** t
        if t_def is None:
            raise ValueError("a slice coordinate is needed for non-triangular basis elements")
        s, r, t = self.exponents
        return Y ** s * t_def ** r * Z ** t

    def degree(self, q: int = 1) -> int:
        """Standard degree; ``q`` is the degree of the slice coordinate."""
        if len(self.exponents) == 2:
            return sum(self.exponents)
        s, r, t = self.exponents
        return s + q * r + t


def enumerate_d_basis(kind: str, max_degd: int, *, d: int | None = None, p: int | None = None,
                      q: int | None = None) -> list[DBasisElement]:
    """The ``D``-basis elements with ``deg_D <= max_degd``, one per value, sorted."""
    out = []
    for n in range(max_degd + 1):
        if kind == "triangular":
            t, r = divmod(n, d + 2)
            out.append(DBasisElement((r, t), n))
        elif kind == "non-triangular":
            r, s, t = ntrf_split(n, p, q)
            out.append(DBasisElement((s, r, t), n))
        else:
            raise UndecidedVerdict(f"no D-basis for verdict kind {kind!r}")
    return out


def basis_for(verdict: Verdict, max_degd: int) -> list[DBasisElement]:
    if verdict.kind == "triangular":
        return enumerate_d_basis("triangular", max_degd, d=verdict.d)
    if verdict.kind == "non-triangular":
        return enumerate_d_basis("non-triangular", max_degd, p=verdict.ntr.p, q=verdict.ntr.q)
    raise UndecidedVerdict(f"image ideals are not classified for this input: {verdict.reason}")


@dataclass(frozen=True)
class ImageIdealResult:
    n: int
    exponent: int
    witness: Polynomial
    witness_scalar: Fraction
    element: DBasisElement | None = None
    formula_exponent: int | None = None
    cofactor: Polynomial | None = None

    def generator(self) -> Polynomial:
        g = Polynomial.variable("X", self.witness.variables) ** self.exponent
        return g * self.cofactor if self.cofactor is not None else g

    def to_json(self) -> dict:
        out = {"n": self.n, "exponent": self.exponent, "formula_exponent": self.formula_exponent,
               "witness": str(self.witness), "witness_scalar": str(self.witness_scalar),
               "generator": str(self.generator())}
        if self.element is not None:
            out["element"] = list(self.element.exponents)
        return out


def image_ideal_oracle(D: Derivation, element: DBasisElement, n: int | None = None,
                       t_def: Polynomial | None = None) -> ImageIdealResult:
    """Apply ``D^n`` to the basis element; the result must be a scalar times a power of X.

    ``D`` must already be written in normal-form coordinates.
    """
    n = element.degd if n is None else n
    if n != element.degd:
        raise ValueError(f"element has deg_D {element.degd}, not {n}")
    w = iterate(D, element.polynomial(t_def), n)
    if len(w) != 1:
        raise NotPurePowerOfX(f"D^{n} of the basis element is {w}")
    (e, c), = w.items()
    if e[1] or e[2]:
        raise NotPurePowerOfX(f"D^{n} of the basis element is {w}")
    return ImageIdealResult(n, e[0], w, c, element)


def formula_exponent(verdict: Verdict, n: int) -> int:
    if verdict.kind == "triangular":
        return trf_exponent(n, verdict.d)
    if verdict.kind == "non-triangular":
        ntr = verdict.ntr
        # the closed form with p = deg_Z P is case (a); orientation b swaps the labels
        if ntr.orientation == "a":
            return ntrf_exponent(n, ntr.p, ntr.q, "a")
        return ntrf_exponent(n, ntr.q, ntr.p, "b")
    raise UndecidedVerdict(f"image ideals are not classified for this input: {verdict.reason}")


def image_ideal(D: Derivation, verdict: Verdict, n: int, cofactor: Polynomial | None = None) -> ImageIdealResult:
    """Closed-form exponent for ``I_n`` cross-checked against :func:`image_ideal_oracle`.

    ``D`` is the input derivation; ``cofactor`` multiplies the generator for a
    reducible ``a * D'`` whose irreducible part ``D'`` is ``D``.
    """
    if not verdict.decided:
        raise UndecidedVerdict(f"image ideals are not classified for this input: {verdict.reason}")
    Dn = transform(D, verdict.change)
    element = basis_for(verdict, n)[n]
    t_def = verdict.ntr.t_def if verdict.ntr is not None else None
    oracle = image_ideal_oracle(Dn, element, n, t_def)
    formula = formula_exponent(verdict, n)
    if formula != oracle.exponent:
        raise FormulaOracleMismatch(f"n={n}: formula gives X^{formula}, oracle gives X^{oracle.exponent}")
    q = verdict.ntr.q if verdict.ntr is not None else 1
    booked = n * verdict.d + element.degree(q)
    if booked != oracle.exponent:
        raise FormulaOracleMismatch(f"n={n}: degree bookkeeping gives {booked}, oracle gives {oracle.exponent}")
    return ImageIdealResult(n, oracle.exponent, oracle.witness, oracle.witness_scalar, element, formula, cofactor)


def image_ideal_table(D: Derivation, verdict: Verdict, max_n: int) -> list[ImageIdealResult]:
    return [image_ideal(D, verdict, n) for n in range(max_n + 1)]


# -- truncated freeness ---------------------------------------------------------


@dataclass
class FreenessReport:
    bound: int
    degrees: list

    @property
    def ok(self) -> bool:
        return all(row["ok"] for row in self.degrees)

    @property
    def cumulative(self) -> int:
        return sum(row["rank"] for row in self.degrees)

    def to_json(self) -> dict:
        return {"bound": self.bound, "ok": self.ok, "cumulative": self.cumulative,
                "expected_cumulative": comb(self.bound + 3, 3), "degrees": self.degrees}


def _standard_elements(verdict: Verdict, m: int) -> list[Polynomial]:
    """Basis elements of standard degree exactly ``m``."""
    X, Y, Z = Polynomial.gens(XYZ)
    out = []
    if verdict.kind == "triangular":
        for r in range(min(verdict.d + 1, m) + 1):
            out.append(Y ** r * Z ** (m - r))
        return out
    ntr = verdict.ntr
    for s in range(min(ntr.q - 1, m) + 1):
        for r in range(ntr.p):
            t = m - s - ntr.q * r
            if t >= 0:
                out.append(Y ** s * ntr.t_def ** r * Z ** t)
    return out


def truncated_freeness_check(D: Derivation, verdict: Verdict, N: int = 8) -> FreenessReport:
    """Check that ``{X^a P^b e}`` is a basis of every degree-``m`` piece for ``m <= N``.

    Here ``e`` runs over the ``D``-basis and ``P`` is the kernel generator, so
    each degree-``m`` piece must have exactly ``C(m+2, 2)`` independent such
    products.
    """
    if not verdict.decided:
        raise UndecidedVerdict(f"freeness is not classified for this input: {verdict.reason}")
    Dn = transform(D, verdict.change)
    X = Polynomial.variable("X", XYZ)
    P = verdict.poly
    if not (Dn(X).is_zero() and Dn(P).is_zero()):
        raise FormulaOracleMismatch("kernel generators are not annihilated in normal-form coordinates")
    dP = verdict.d + 2
    elements_by_degree = {k: _standard_elements(verdict, k) for k in range(N + 1)}
    rows = []
    for m in range(N + 1):
        span = []
        for k in range(m + 1):
            for e in elements_by_degree[k]:
                for b in range((m - k) // dP + 1):
                    a = m - k - b * dP
                    span.append(X ** a * P ** b * e)
        monos = sorted({(i, j, m - i - j) for i in range(m + 1) for j in range(m + 1 - i)})
        dim = comb(m + 2, 2)
        matrix = [[f.coefficient(mono) for mono in monos] for f in span]
        rank = linalg.rank(matrix, len(monos)) if matrix else 0
        row = {"m": m, "dimension": dim, "spanning": len(span), "rank": rank, "ok": rank == len(span) == dim}
        rows.append(row)
        if rank < len(span):
            raise DependenceFound(f"degree {m}: {len(span)} products but rank {rank}", report=rows)
        if rank < dim:
            raise SpanDeficit(f"degree {m}: rank {rank} below dimension {dim}", report=rows)
    return FreenessReport(N, rows)
