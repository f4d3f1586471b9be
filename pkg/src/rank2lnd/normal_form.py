"""Normal forms for irreducible homogeneous rank-2 derivations on three variables.

The pipeline works on ``D = gamma * Jacobian(X, P)`` where ``X`` is the
unique (up to scale) linear form in the kernel and ``k[X, P]`` is the kernel:

1. :func:`sa_normalize` picks linear coordinates ``X, Y, Z`` with
   ``P = Y^(d+2) + X*q(X, Y, Z)``.
2. :func:`sb_normalize` reads off ``zdeg = deg_Z P`` and the coefficient
   polynomials of the remaining terms.
3. :func:`decide_triangularizable` settles ``zdeg == 1`` (triangular);
   otherwise :func:`ntr_reduce` completes ``P`` to a ``p``-th power in a slice
   coordinate ``T = h(X, Y) + X^(q-1)*Z`` when ``d + 2 = p*q``.

Normal-form coordinates are always named ``X, Y, Z``; their expressions in the
input variables are the rows of the recorded :class:`LinearChange`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import factorint

from .coords import LinearChange, linear_coefficients
from .derivation import (DEFAULT_CAP, Derivation, KernelPair, complete_basis, deg_d, homogeneity_degree,
                         is_irreducible, jacobian_derivation, kernel_generator_from_images, kernel_membership,
                         linear_kernel_elements, nilpotency_probe, reduce_mod_variable, scalar_ratio, transform,
                         unique_kernel_variable)
from .errors import (CapExceeded, DivisibilityFail, NewtonGateFail, NonPolynomialRewrite, NotHomogeneous,
                     NotIrreducible, NotJacobian, NotRankTwo, PerfectPowerFail, Rank2Error, RankAssumptionViolated,
                     RewriteFail, ShapeMismatch, SpecError, TerminalShapeFail, VerificationMismatch, ZeroDerivation)
from .newton import grnp_shape_check, kernel_triangle_check, newton_polygon
from .poly import Polynomial, exact_divide, rewrite_in_slice_coordinate

XYZ = ("X", "Y", "Z")
XYT = ("X", "Y", "T")
OUTSIDE_PQ = "degree outside pq-2 classification"


def _x(vars_=XYZ):
    return Polynomial.variable("X", vars_)


def _mono(vars_, **exps) -> Polynomial:
    return Polynomial.monomial(tuple(exps.get(v, 0) for v in vars_), vars_)


@dataclass(frozen=True)
class SaForm:
    change: LinearChange
    p_normalized: Polynomial
    unit: Fraction
    gamma: Fraction
    d: int
    derivation: Derivation

    def to_json(self) -> dict:
        return {"change": self.change.to_json(), "p": str(self.p_normalized), "unit": str(self.unit),
                "gamma": str(self.gamma), "d": self.d}


@dataclass(frozen=True)
class SbForm:
    change: LinearChange
    p: Polynomial
    gamma: Fraction
    d: int
    derivation: Derivation
    i: int | None  # None marks the d = 0 case
    beta: Fraction
    fj: dict = field(default_factory=dict)  # j -> homogeneous f_j(X, Y) of degree j
    zdeg: int = 1

    def reassemble(self) -> Polynomial:
        X, Y, Z = Polynomial.gens(XYZ)
        out = Y ** (self.d + 2) + Polynomial.constant(self.beta, XYZ) * X ** (self.d + 2 - self.zdeg) * Z ** self.zdeg
        for j, f in self.fj.items():
            out = out + X * f * Z ** (self.d + 1 - j)
        return out

    def to_json(self) -> dict:
        return {"change": self.change.to_json(), "p": str(self.p), "gamma": str(self.gamma), "d": self.d,
                "i": self.i if self.i is not None else "d0", "beta": str(self.beta), "zdeg": self.zdeg,
                "f": {str(j): str(f) for j, f in sorted(self.fj.items())}}


@dataclass(frozen=True)
class NtrForm:
    p: int
    q: int
    h: Polynomial
    t_def: Polynomial
    c: tuple[Fraction, ...]  # c_1 .. c_p
    gamma: Fraction
    alpha: Fraction
    shifts: tuple[tuple[int, Fraction], ...]  # (r, lambda) per completing step
    x_shift: Fraction  # coefficient of X^(pq) dropped from the terminal form
    orientation: str  # "a" if deg_Z P equals the requested p, else "b"
    change: LinearChange
    poly: Polynomial
    derivation: Derivation

    def reassemble(self) -> Polynomial:
        X, Y, _ = Polynomial.gens(XYZ)
        p, q = self.p, self.q
        T = self.t_def
        out = T ** p
        for i, ci in enumerate(self.c[:-1], start=1):
            out = out + X ** (i * q) * T ** (p - i) * ci
        out = out + X ** (p * q - 1) * Y * self.c[-1] + X ** (p * q) * self.x_shift
        return out

    def slice_image(self) -> Polynomial:
        """Expected ``D(T) = gamma * c_p * X^(pq+q-2)``."""
        return _x() ** (self.p * self.q + self.q - 2) * (self.gamma * self.c[-1])

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "h": str(self.h), "t_def": str(self.t_def),
                "c": [str(c) for c in self.c], "gamma": str(self.gamma), "alpha": str(self.alpha),
                "shifts": [{"r": r, "lambda": str(lam)} for r, lam in self.shifts],
                "x_shift": str(self.x_shift), "orientation": self.orientation}


@dataclass(frozen=True)
class Verdict:
    kind: str  # "triangular", "non-triangular" or "undecided"
    d: int
    degd_y: int | None
    degd_z: int | None
    change: LinearChange
    poly: Polynomial  # kernel generator in normal-form coordinates
    derivation: Derivation  # input derivation in normal-form coordinates
    gamma: Fraction
    sb: SbForm | None = None
    ntr: NtrForm | None = None
    beta: Fraction | None = None
    f_top: Polynomial | None = None  # f_{d+1} in the triangular case
    reason: str | None = None
    reason_code: str | None = None

    @property
    def decided(self) -> bool:
        return self.kind != "undecided"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "d": self.d, "degd": {"Y": self.degd_y, "Z": self.degd_z},
               "change": self.change.to_json(), "normal_form": str(self.poly), "gamma": str(self.gamma)}
        if self.kind == "triangular":
            out["beta"] = str(self.beta)
            out["f_top"] = str(self.f_top)
        if self.ntr is not None:
            out["ntr"] = self.ntr.to_json()
        if self.reason is not None:
            out["reason"] = self.reason
            out["reason_code"] = self.reason_code
        return out


# ---------------------------------------------------------------------------


def sa_normalize(D: Derivation, x: Polynomial, P: Polynomial, cap: int = DEFAULT_CAP) -> SaForm:
    """Linear coordinates with ``DX = 0`` and ``P = unit * (Y^(d+2) + X*q)``."""
    d = homogeneity_degree(D)
    if d is None:
        raise NotHomogeneous("derivation is not homogeneous for the standard grading")
    change0 = LinearChange.from_forms(complete_basis([x]), ("X", "Y0", "Z0"))
    D0 = transform(D, change0)
    Dbar = reduce_mod_variable(D0, "X")
    if Dbar.is_zero():
        raise NotIrreducible("both images vanish modulo the kernel variable")
    forms = linear_kernel_elements(Dbar)
    if len(forms) != 1:
        raise ShapeMismatch("the induced derivation modulo X has no unique linear kernel form")
    v1 = forms[0].embed(D0.variables)
    x0 = Polynomial.variable("X", D0.variables)
    basis = complete_basis([x0, v1])
    change = change0.then(LinearChange.from_forms(basis, XYZ))

    Pn = change.to_new(P)
    if not Pn.is_homogeneous() or Pn.total_degree() != d + 2:
        raise ShapeMismatch(f"kernel generator must be homogeneous of degree {d + 2}")
    Pbar = Pn.substitute({"X": 0})
    unit = Pbar.coefficient((0, d + 2, 0))
    if not unit or len(Pbar) != 1:
        raise ShapeMismatch(f"P modulo X is {Pbar}, not a unit times Y^{d + 2}")
    p_norm = Pn.scale(1 / unit)

    Dn = transform(D, change)
    gamma = scalar_ratio(Dn, jacobian_derivation(_x(), p_norm))
    if gamma is None or gamma == 0:
        raise NotJacobian("derivation is not a nonzero multiple of Jacobian(X, P)")
    Y, Z = Polynomial.gens(XYZ)[1:]
    if kernel_membership(Dn, Y):
        raise NotRankTwo("Y lies in the kernel, contradicting rank 2")
    dy = deg_d(Dn, Y, cap).value
    dz = deg_d(Dn, Z, cap).value
    if not 0 < dy < dz:
        raise NotRankTwo(f"expected 0 < deg_D(Y) < deg_D(Z), got {dy}, {dz}")
    return SaForm(change, p_norm, unit, gamma, d, Dn)


def sb_normalize(sa: SaForm, d: int | None = None) -> SbForm:
    """Refine to ``P = Y^(d+2) + X*f_{d+1} + ... + beta*X^(i+2)*Z^(d-i)``."""
    d = sa.d if d is None else d
    P = sa.p_normalized
    if d == 0:
        X, Y, Z = Polynomial.gens(XYZ)
        rest = P - Y ** 2
        lin = exact_divide(rest, X)
        if lin is None:
            raise ShapeMismatch("P - Y^2 is not divisible by X")
        a, b, g = linear_coefficients(lin) if not lin.is_zero() else (0, 0, 0)
        if g == 0:
            raise NotRankTwo("Z does not occur in P, contradicting rank 2")
        step = LinearChange.from_rows([[1, 0, 0], [0, 1, 0], [a, b, g]], XYZ)
        change = sa.change.then(step)
        Pn = step.to_new(P)
        Dn = transform(sa.derivation, step)
        gamma = scalar_ratio(Dn, jacobian_derivation(X, Pn))
        if Pn != Y ** 2 + X * Z or gamma is None:
            raise ShapeMismatch("failed to reach Y^2 + X*Z")
        return SbForm(change, Pn, gamma, 0, Dn, None, Fraction(1), {}, 1)

    coeffs = P.coefficients_in("Z")
    zdeg = max(coeffs)
    if zdeg == 0:
        raise NotRankTwo("Z does not occur in P, contradicting rank 2")
    if (d + 2) % zdeg or zdeg > d:
        raise DivisibilityFail(f"deg_Z P = {zdeg} does not properly divide d + 2 = {d + 2}", zdeg=zdeg)
    i = d - zdeg
    lead = coeffs[zdeg]
    beta = lead.coefficient((i + 2, 0, 0))
    if len(lead) != 1 or not beta:
        raise ShapeMismatch(f"coefficient of Z^{zdeg} is {lead}, expected beta*X^{i + 2}")
    X, Y = Polynomial.gens(XYZ)[:2]
    fj = {}
    for k in range(zdeg):
        ck = coeffs.get(k, Polynomial.zero(XYZ))
        if k == 0:
            ck = ck - Y ** (d + 2)
        f = exact_divide(ck, X)
        if f is None:
            raise ShapeMismatch(f"coefficient of Z^{k} is not divisible by X")
        j = d + 1 - k
        if not f.is_zero() and (not f.is_homogeneous() or f.total_degree() != j):
            raise ShapeMismatch(f"f_{j} = {f} is not homogeneous of degree {j}")
        fj[j] = f
    sb = SbForm(sa.change, P, sa.gamma, d, sa.derivation, i, beta, fj, zdeg)
    if sb.reassemble() != P:
        raise ShapeMismatch("coefficient extraction does not reproduce P")
    return sb


def newton_gate(P: Polynomial) -> dict:
    """Kernel-shape tests over the coefficient ring Q[X] in the variables (Y, Z)."""
    tri = kernel_triangle_check(newton_polygon(P, "Y", "Z"))
    if not tri.passed:
        raise NewtonGateFail(f"Newton polygon of {P} is not a legal kernel triangle ({tri.reason})")
    shape = grnp_shape_check(P, "Y", "Z")
    if not shape.passed:
        raise NewtonGateFail(f"{P} violates the degree bounds ({shape.reason})")
    return {"triangle": tri.to_json(), "shape": shape.to_json()}


def prime_pair(n: int) -> tuple[int, int] | None:
    """``(p, q)`` with ``p <= q`` primes and ``p*q == n``, or ``None``."""
    fac = factorint(n)
    if sum(fac.values()) != 2:
        return None
    primes = sorted(p for p, k in fac.items() for _ in range(k))
    return primes[0], primes[1]


def decide_triangularizable(sb: SbForm) -> Verdict | None:
    """Triangular verdict when ``zdeg == 1``; ``None`` defers to :func:`ntr_reduce`.

    Degrees with ``d + 2`` not a product of two primes end as undecided.
    """
    d = sb.d
    if sb.zdeg == 1:
        f_top = sb.fj.get(d + 1, Polynomial.zero(XYZ)) if d else Polynomial.zero(XYZ)
        return Verdict("triangular", d, 1, d + 2, sb.change, sb.p, sb.derivation, sb.gamma, sb=sb,
                       beta=sb.beta, f_top=f_top)
    if factorint(d + 2).keys() == {d + 2}:
        # d+2 prime forces zdeg = 1
        raise VerificationMismatch(f"d + 2 = {d + 2} is prime but deg_Z P = {sb.zdeg}")
    if prime_pair(d + 2) is None:
        return Verdict("undecided", d, None, None, sb.change, sb.p, sb.derivation, sb.gamma, sb=sb,
                       reason=OUTSIDE_PQ, reason_code="outside-pq")
    return None


def _check_perfect_power(top: Polynomial, root: Polynomial, p: int, what: str):
    if top != root ** p:
        raise PerfectPowerFail(f"{what}: top summand {top} is not ({root})^{p}; not in this class over Q")


def ntr_reduce(sb: SbForm, p: int, q: int) -> NtrForm:
    """Complete ``P`` to ``T^p + sum c_i X^(iq) T^(p-i) + c_p X^(pq-1) Y``."""
    if p * q != sb.d + 2 or sb.zdeg not in (p, q):
        raise ValueError(f"need d + 2 = p*q and deg_Z P in {{p, q}}; got d={sb.d}, zdeg={sb.zdeg}, p={p}, q={q}")
    orientation = "a" if sb.zdeg == p else "b"
    if orientation == "b":
        p, q = q, p
    P = sb.p
    X, Y, Z = Polynomial.gens(XYZ)

    # step 1: top summand for weights (Y, Z) = (1, q) is (Y^q + alpha*X^(q-1)*Z)^p
    comps = P.homogeneous_components((0, 1, q))
    top_deg = max(comps)
    if top_deg != p * q:
        raise PerfectPowerFail(f"top weighted degree {top_deg} differs from {p * q}")
    alpha = comps[top_deg].coefficient((q - 1, (p - 1) * q, 1)) / p
    if not alpha:
        raise PerfectPowerFail("top summand has no mixed term; not in this class over Q")
    _check_perfect_power(comps[top_deg], Y ** q + X ** (q - 1) * Z * alpha, p, "step 1")

    # step 2: rename alpha*Z as Z and pass to Z1 = Y^q + X^(q-1)*Z
    rescale = LinearChange.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, alpha]], XYZ)
    change = sb.change.then(rescale)
    P2 = rescale.to_new(P)
    try:
        G = rewrite_in_slice_coordinate(P2, Y ** q + X ** (q - 1) * Z, q, new_name="T")
    except NonPolynomialRewrite as exc:
        raise RewriteFail(str(exc)) from exc
    _check_slice_shape(G, p, q)

    # step 3: shift T by lambda*X^(q-r)*Y^r while the trailing coefficient has deg_Y >= p
    Xt, Yt, T = Polynomial.gens(XYT)
    h = Y ** q
    shifts = []
    last_r = q
    while True:
        g = G.coefficients_in("T").get(0, Polynomial.zero(XYT))
        dy = g.degree_in("Y")
        if dy < p:
            break
        if dy % p:
            raise PerfectPowerFail(f"deg_Y of trailing coefficient is {dy}, not a multiple of {p}")
        r = dy // p
        if not 1 <= r < last_r:
            raise TerminalShapeFail(f"completing step produced r = {r}; expected 1 <= r < {last_r}")
        if len(shifts) >= q:
            raise TerminalShapeFail("completing the power did not terminate within q steps")
        top = G.top_component((0, 1, r))
        lam = top.coefficient((q - r, r, p - 1)) / p
        if not lam:
            raise PerfectPowerFail(f"no mixed term in the top summand for r = {r}")
        shift = Xt ** (q - r) * Yt ** r * lam
        _check_perfect_power(top, T + shift, p, f"step 3 (r={r})")
        G = G.substitute({"T": T - shift})
        h = h + X ** (q - r) * Y ** r * lam
        shifts.append((r, lam))
        last_r = r
        _check_slice_shape(G, p, q)

    # step 4: terminal shape
    coeffs = G.coefficients_in("T")
    g = coeffs.get(0, Polynomial.zero(XYT))
    if g.degree_in("Y") != 1:
        raise TerminalShapeFail(f"trailing coefficient {g} has deg_Y != 1")
    cp = g.coefficient((p * q - 1, 1, 0))
    x_shift = g.coefficient((p * q, 0, 0))
    c = []
    for i in range(1, p):
        ci_poly = coeffs.get(p - i, Polynomial.zero(XYT))
        ci = ci_poly.coefficient((i * q, 0, 0))
        if ci_poly != Xt ** (i * q) * ci:
            raise TerminalShapeFail(f"coefficient of T^{p - i} is {ci_poly}, expected c*X^{i * q}")
        c.append(ci)
    c.append(cp)
    t_def = h + X ** (q - 1) * Z
    Dn = transform(sb.derivation, rescale)
    gamma = scalar_ratio(Dn, jacobian_derivation(X, P2))
    form = NtrForm(p, q, h, t_def, tuple(c), gamma, alpha, tuple(shifts), x_shift, orientation, change, P2, Dn)
    if form.reassemble() != P2:
        raise VerificationMismatch("terminal form does not reproduce P")
    return form


def _check_slice_shape(G: Polynomial, p: int, q: int):
    coeffs = G.coefficients_in("T")
    if max(coeffs) != p or coeffs[p] != 1:
        raise RewriteFail(f"rewritten P is not monic of degree {p} in the slice variable")
    if not G.is_homogeneous((1, 1, q)):
        raise RewriteFail("rewritten P is not homogeneous with the slice variable of degree q")
    for j in range(1, p + 1):
        cj = coeffs.get(p - j)
        if cj is not None and any(e[0] == 0 for e in cj.terms):
            raise RewriteFail(f"coefficient of T^{p - j} is not divisible by X")
    if coeffs.get(0) is None:
        raise RewriteFail("trailing coefficient vanishes")


# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    checks: dict = field(default_factory=dict)

    def add(self, name: str, expected, actual):
        self.checks[name] = {"expected": str(expected), "actual": str(actual), "ok": expected == actual}

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks.values())

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}


def verify_verdict(D: Derivation, v: Verdict, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Recompute the deg_D profile and slice image from the input derivation."""
    report = VerificationReport()
    if not v.decided:
        return report
    Dn = transform(D, v.change)
    X, Y, Z = Polynomial.gens(XYZ)
    report.add("deg_D(X)", 0, deg_d(Dn, X, cap).value)
    report.add("deg_D(Y)", v.degd_y, deg_d(Dn, Y, cap).value)
    report.add("deg_D(Z)", v.degd_z, deg_d(Dn, Z, cap).value)
    report.add("D = gamma*Jacobian(X, P)", v.gamma, scalar_ratio(Dn, jacobian_derivation(X, v.poly)))
    if v.kind == "triangular":
        dy, dz = Dn.images[1], Dn.images[2]
        report.add("DY in k*X^(d+1)", True, len(dy) == 1 and dy.coefficient((v.d + 1, 0, 0)) != 0)
        report.add("DZ in k[X,Y]", True, dz.free_of("Z"))
    else:
        ntr = v.ntr
        report.add("D(T)", ntr.slice_image(), Dn(ntr.t_def))
        report.add("deg_D(Z) = q*deg_D(Y)", True, v.degd_z == ntr.q * v.degd_y)
    if not report.ok:
        raise VerificationMismatch("verdict does not match recomputed invariants", report=report.to_json())
    return report


# ---------------------------------------------------------------------------


@dataclass
class Analysis:
    derivation: Derivation
    d: int
    x: Polynomial
    kernel_generator: Polynomial
    gamma: Fraction
    sa: SaForm
    sb: SbForm
    newton: dict
    verdict: Verdict
    verification: VerificationReport | None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "kernel_variable": str(self.x),
            "kernel_generator": str(self.kernel_generator),
            "gamma": str(self.gamma),
            "sa": self.sa.to_json(),
            "sb": self.sb.to_json(),
            "newton": self.newton,
            "verdict": self.verdict.to_json(),
            "verification": self.verification.to_json() if self.verification else None,
        }


def kernel_pair_for(D: Derivation, kernel_pair: KernelPair | None = None) -> KernelPair:
    """Validate a supplied kernel pair, or recover one from the images."""
    x = unique_kernel_variable(D)
    if kernel_pair is None:
        P, gamma = kernel_generator_from_images(D, x)
        return KernelPair(x, P, gamma)
    kx = kernel_pair.x
    try:
        linear_coefficients(kx)
    except ValueError:
        raise SpecError(f"kernel variable {kx} is not a linear form") from None
    if not kernel_membership(D, kx):
        raise SpecError(f"declared kernel variable {kx} is not annihilated")
    if not kernel_membership(D, kernel_pair.p):
        raise SpecError(f"declared kernel generator {kernel_pair.p} is not annihilated")
    gamma = scalar_ratio(D, jacobian_derivation(kx, kernel_pair.p))
    if gamma is None or gamma == 0:
        raise NotJacobian("derivation is not a scalar multiple of Jacobian(x, p)")
    return KernelPair(kx, kernel_pair.p, gamma)


def analyze(D: Derivation, kernel_pair: KernelPair | None = None, cap: int = DEFAULT_CAP,
            verify: bool = True) -> Analysis:
    """Run every gate and return the normal form and verdict.

    Structural failures raise :class:`Rank2Error` subclasses. Inputs that pass
    the structural gates but fall outside the classification, or fail the
    completing-the-power reduction over Q, end as an undecided verdict.
    """
    if len(D.variables) != 3:
        raise SpecError("the pipeline needs exactly three variables")
    if D.is_zero():
        raise ZeroDerivation("the zero derivation has no normal form")
    d = homogeneity_degree(D)
    if d is None:
        raise NotHomogeneous("derivation is not homogeneous for the standard grading")
    if not is_irreducible(D):
        raise NotIrreducible("images share a nonconstant common factor")
    kp = kernel_pair_for(D, kernel_pair)
    if d < 0:
        raise RankAssumptionViolated(f"homogeneous degree {d} < 0")
    # cheap necessary condition before the nilpotency probe, which can be slow to fail
    first = LinearChange.from_forms(complete_basis([kp.x]), XYZ).to_new(kp.p)
    tri = kernel_triangle_check(newton_polygon(first, "Y", "Z"))
    if not tri.passed:
        raise NewtonGateFail(f"Newton polygon of the kernel generator is not a legal kernel triangle ({tri.reason})")
    # sa_normalize rejects most non-nilpotent inputs through the reduction modulo X, so it runs first
    sa = sa_normalize(D, kp.x, kp.p, cap)
    probe = nilpotency_probe(D, cap)
    if not probe.ok:
        raise CapExceeded(f"derivation is not nilpotent on the variables within {cap} steps", cap=cap)
    sb = sb_normalize(sa)
    gate = newton_gate(sb.p)
    verdict = decide_triangularizable(sb)
    if verdict is None:
        p, q = prime_pair(d + 2)
        try:
            ntr = ntr_reduce(sb, p, q)
        except (PerfectPowerFail, RewriteFail, TerminalShapeFail) as exc:
            verdict = Verdict("undecided", d, None, None, sb.change, sb.p, sb.derivation, sb.gamma, sb=sb,
                              reason=str(exc), reason_code=exc.code)
        else:
            verdict = Verdict("non-triangular", d, ntr.p, ntr.p * ntr.q, ntr.change, ntr.poly, ntr.derivation,
                              ntr.gamma, sb=sb, ntr=ntr)
    report = verify_verdict(D, verdict, cap) if verify else None
    return Analysis(D, d, kp.x, kp.p, kp.scale, sa, sb, gate, verdict, report)


__all__ = [
    "SaForm", "SbForm", "NtrForm", "Verdict", "VerificationReport", "Analysis", "sa_normalize", "sb_normalize",
    "decide_triangularizable", "ntr_reduce", "verify_verdict", "analyze", "newton_gate", "prime_pair",
    "kernel_pair_for", "OUTSIDE_PQ", "Rank2Error",
]
