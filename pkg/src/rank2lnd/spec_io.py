"""JSON documents describing a derivation.

Two shapes are accepted::

    {"variables": ["X", "Y", "Z"], "images": {"X": "0", "Y": "-X", "Z": "2*Y"}}
    {"variables": ["X", "Y", "Z"], "kernel_pair": {"x": "X", "p": "Y^2+X*Z", "scale": "1"}}

``variables`` defaults to ``["X", "Y", "Z"]``; missing images are zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .derivation import Derivation, KernelPair, kernel_membership
from .errors import ParseError, SpecError
from .parse import parse_polynomial

DEFAULT_VARIABLES = ("X", "Y", "Z")


@dataclass(frozen=True)
class DerivationSpec:
    derivation: Derivation
    kernel_pair: KernelPair | None = None


def _poly(text, variables, where: str):
    if not isinstance(text, (str, int)):
        raise SpecError(f"{where}: expected a polynomial string, got {type(text).__name__}")
    try:
        return parse_polynomial(str(text), variables)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc.args[0].rsplit(' at line', 1)[0]}", str(text), exc.pos) from None


def _scalar(text, where: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"{where}: {text!r} is not a rational number") from None


def parse_spec(text: str) -> DerivationSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None
    return spec_from_dict(doc)


def spec_from_dict(doc) -> DerivationSpec:
    if not isinstance(doc, dict):
        raise SpecError("a derivation document must be a JSON object")
    unknown = set(doc) - {"variables", "images", "kernel_pair"}
    if unknown:
        raise SpecError(f"unknown keys: {sorted(unknown)}")
    variables = doc.get("variables", list(DEFAULT_VARIABLES))
    if (not isinstance(variables, list) or not variables
            or not all(isinstance(v, str) and v.isidentifier() for v in variables)):
        raise SpecError("variables must be a non-empty list of identifiers")
    if len(set(variables)) != len(variables):
        raise SpecError("variables must be distinct")
    variables = tuple(variables)
    has_images, has_pair = "images" in doc, "kernel_pair" in doc
    if has_images == has_pair:
        raise SpecError("exactly one of 'images' or 'kernel_pair' is required")

    if has_images:
        images = doc["images"]
        if not isinstance(images, dict):
            raise SpecError("images must be an object mapping variables to polynomials")
        extra = set(images) - set(variables)
        if extra:
            raise SpecError(f"images given for undeclared variables {sorted(extra)}")
        polys = {v: _poly(images.get(v, "0"), variables, f"images.{v}") for v in variables}
        return DerivationSpec(Derivation.from_images(polys, variables))

    pair = doc["kernel_pair"]
    if not isinstance(pair, dict) or not {"x", "p"} <= set(pair) or set(pair) - {"x", "p", "scale"}:
        raise SpecError("kernel_pair needs keys 'x' and 'p' and optionally 'scale'")
    if len(variables) != 3:
        raise SpecError("kernel_pair documents need exactly three variables")
    x = _poly(pair["x"], variables, "kernel_pair.x")
    p = _poly(pair["p"], variables, "kernel_pair.p")
    scale = _scalar(pair.get("scale", "1"), "kernel_pair.scale")
    if scale == 0:
        raise SpecError("kernel_pair.scale must be nonzero")
    kp = KernelPair(x, p, scale)
    D = kp.derivation()
    if not (kernel_membership(D, x) and kernel_membership(D, p)):
        raise SpecError("declared kernel pair is not annihilated by its derivation")
    return DerivationSpec(D, kp)


def spec_to_dict(spec: DerivationSpec | Derivation) -> dict:
    if isinstance(spec, Derivation):
        spec = DerivationSpec(spec)
    D = spec.derivation
    out = {"variables": list(D.variables)}
    if spec.kernel_pair is not None:
        kp = spec.kernel_pair
        out["kernel_pair"] = {"x": str(kp.x), "p": str(kp.p), "scale": str(kp.scale)}
    else:
        out["images"] = D.as_dict()
    return out


def dump_spec(spec: DerivationSpec | Derivation) -> str:
    return json.dumps(spec_to_dict(spec), indent=2)


def load_spec_file(path: str) -> DerivationSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())

