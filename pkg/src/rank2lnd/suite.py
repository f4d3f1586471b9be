"""Desk-scale property suites behind ``rank2lnd verify``.

Each check is reported as ``{"name", "passed", "detail"}``; a check that
raises is recorded as failed with the error code instead of aborting the run.
"""

from __future__ import annotations

import random
from typing import Callable

from . import templates
from .derivation import DEFAULT_CAP, KernelPair
from .errors import Rank2Error
from .image_ideal import image_ideal, truncated_freeness_check
from .newton import grnp_shape_check, kernel_triangle_check, newton_polygon
from .normal_form import XYZ, Analysis, analyze
from .poly import Polynomial
from .spec_io import DerivationSpec

TRIANGULAR_DEGREES = (1, 3, 5)
PRIME_PAIRS = ((2, 2), (2, 3), (3, 2))


def _record(results: list, name: str, fn: Callable[[], str]) -> bool:
    try:
        detail = fn()
        passed = True
    except AssertionError as exc:
        detail, passed = f"failed: {exc}", False
    except Rank2Error as exc:
        detail, passed = f"error [{exc.code}]: {exc}", False
    results.append({"name": name, "passed": passed, "detail": detail})
    return passed


def profile(a: Analysis) -> tuple:
    v = a.verdict
    return v.kind, v.degd_y, v.degd_z


def newton_consistency(P: Polynomial) -> str:
    tri = kernel_triangle_check(newton_polygon(P, "Y", "Z"))
    assert tri.passed, f"kernel triangle rejected ({tri.reason})"
    shape = grnp_shape_check(P, "Y", "Z")
    assert shape.passed, f"shape check rejected ({shape.reason})"
    return f"triangle legs ({tri.m}, {tri.n}), q = {shape.q}"


def image_ideal_agreement(a: Analysis, max_n: int) -> str:
    exps = [image_ideal(a.derivation, a.verdict, n).exponent for n in range(max_n + 1)]
    assert all(x <= y for x, y in zip(exps, exps[1:])), f"exponents not monotone: {exps}"
    return "exponents " + ", ".join(map(str, exps))


def freeness(a: Analysis, trunc: int) -> str:
    rep = truncated_freeness_check(a.derivation, a.verdict, trunc)
    return f"ranks match C(m+2,2) for m <= {trunc}, cumulative {rep.cumulative}"


def scramble_invariance(a: Analysis, rng: random.Random, count: int, cap: int) -> str:
    base = profile(a)
    v = a.verdict
    for _ in range(count):
        inst = templates.scrambled(v.poly, templates.random_scramble(rng), v.gamma)
        got = profile(analyze(inst.derivation, inst.kernel_pair, cap=cap))
        assert got == base, f"scramble {inst.change.to_json()['forms']} gives {got}, expected {base}"
    return f"{count} scrambles keep {base}"


def corrupted_rejected(P: Polynomial, rng: random.Random, cap: int) -> str:
    bad = P + templates.off_triangle_term(rng, P)
    try:
        a = analyze(KernelPair(Polynomial.variable("X", XYZ), bad).derivation(), cap=cap)
    except Rank2Error as exc:
        return f"{bad} rejected [{exc.code}]"
    assert not a.verdict.decided, f"corrupted {bad} was accepted as {a.verdict.kind}"
    return f"{bad} left undecided [{a.verdict.reason_code}]"


def run_instance_suite(spec: DerivationSpec, rng: random.Random, max_n: int = 12, trunc: int = 8,
                       cap: int = DEFAULT_CAP, scrambles: int = 3) -> list[dict]:
    results: list[dict] = []
    holder = {}

    def pipeline():
        a = analyze(spec.derivation, spec.kernel_pair, cap=cap)
        holder["a"] = a
        assert a.verdict.decided, f"verdict undecided: {a.verdict.reason}"
        assert a.verification is not None and a.verification.ok, "verification report failed"
        kind, y, z = profile(a)
        return f"{kind}, deg_D profile ({y}, {z})"

    if not _record(results, "pipeline and verification", pipeline):
        return results
    a = holder["a"]
    _record(results, "newton consistency", lambda: newton_consistency(a.sb.p))
    _record(results, f"image ideals n <= {max_n}", lambda: image_ideal_agreement(a, max_n))
    _record(results, f"truncated freeness N = {trunc}", lambda: freeness(a, trunc))
    _record(results, "scramble invariance", lambda: scramble_invariance(a, rng, scrambles, cap))
    return results


def _families():
    for d in TRIANGULAR_DEGREES:
        yield f"triangular d={d}", "triangular", {"d": d}, (1, d + 2)
    for p, q in PRIME_PAIRS:
        yield f"non-triangular p={p} q={q}", "non-triangular", {"p": p, "q": q}, (p, p * q)


def run_random_suite(rng: random.Random, max_n: int = 12, trunc: int = 8, cap: int = DEFAULT_CAP,
                     count: int = 5) -> list[dict]:
    results: list[dict] = []
    for label, kind, params, (dy, dz) in _families():
        for i in range(count):
            inst = templates.random_instance(rng, kind, **params)
            holder = {}

            def pipeline(inst=inst):
                a = analyze(inst.derivation, inst.kernel_pair, cap=cap)
                holder["a"] = a
                assert profile(a) == (kind, dy, dz), f"{inst.base}: got {profile(a)}"
                return f"{inst.base} -> {kind} ({dy}, {dz})"

            name = f"{label} #{i}"
            if not _record(results, name, pipeline):
                continue
            a = holder["a"]
            _record(results, f"{name} newton", lambda: newton_consistency(a.sb.p))
            _record(results, f"{name} image ideals", lambda: image_ideal_agreement(a, max_n))
            if i == 0:
                _record(results, f"{name} freeness", lambda: freeness(a, trunc))
            _record(results, f"{name} corrupted", lambda: corrupted_rejected(inst.base, rng, cap))
    return results
