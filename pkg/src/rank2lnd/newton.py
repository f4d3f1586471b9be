"""Newton polygons in two distinguished variables.

All other ring variables are coefficients (weight ``(0, 0)``). Hulls are
computed exactly on integer lattice points with Andrew's monotone chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Polynomial

Point = tuple[int, int]


@dataclass(frozen=True)
class NewtonPolygon:
    points: frozenset[Point]
    hull: tuple[Point, ...]

    def to_json(self) -> dict:
        return {"points": sorted(list(p) for p in self.points), "hull": [list(p) for p in self.hull]}


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple[Point, ...]:
    """Counterclockwise hull vertices (no collinear points), starting at the lexicographic minimum."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return tuple(hull)


def newton_polygon(f: Polynomial, vx: str, vy: str) -> NewtonPolygon:
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polygon")
    ix, iy = f.index(vx), f.index(vy)
    pts = {(e[ix], e[iy]) for e in f.terms} | {(0, 0)}
    return NewtonPolygon(frozenset(pts), convex_hull(pts))


@dataclass(frozen=True)
class TriangleCheck:
    passed: bool
    m: int | None = None  # leg along the first axis
    n: int | None = None  # leg along the second axis
    divides: str | None = None  # "n|m", "m|n" or "m=n"
    reason: str | None = None

    def to_json(self) -> dict:
        return {"passed": self.passed, "m": self.m, "n": self.n, "divides": self.divides, "reason": self.reason}


def _divides(a: int, b: int) -> bool:
    # 0 | 0 holds, 0 | k fails for k > 0, k | 0 holds
    if a == 0:
        return b == 0
    return b % a == 0


def kernel_triangle_check(np: NewtonPolygon) -> TriangleCheck:
    hull = np.hull
    if hull == ((0, 0),):
        return TriangleCheck(False, 0, 0, reason="constant")
    xs = [p for p in hull if p[1] == 0 and p[0] > 0]
    ys = [p for p in hull if p[0] == 0 and p[1] > 0]
    if len(hull) == 2:
        if xs:
            m, n = xs[0][0], 0
        elif ys:
            m, n = 0, ys[0][1]
        else:
            return TriangleCheck(False, reason="segment-off-axis")
    elif len(hull) == 3 and xs and ys:
        m, n = xs[0][0], ys[0][1]
    else:
        return TriangleCheck(False, reason="not-axis-triangle")
    if m == n:
        return TriangleCheck(True, m, n, "m=n")
    if _divides(n, m):
        return TriangleCheck(True, m, n, "n|m")
    if _divides(m, n):
        return TriangleCheck(True, m, n, "m|n")
    return TriangleCheck(False, m, n, reason="legs-not-divisible")


@dataclass(frozen=True)
class ShapeCheck:
    passed: bool
    q: int
    violations: list = field(default_factory=list)
    reason: str | None = None

    def to_json(self) -> dict:
        return {"passed": self.passed, "q": self.q, "violations": [list(v) for v in self.violations],
                "reason": self.reason}


def grnp_shape_check(f: Polynomial, vx: str, vy: str, units: str = "fraction-field") -> ShapeCheck:
    """Shape test for a kernel element with ``deg_vx f = n = q*m`` and ``m = deg_vy f``, ``q > 1``.

    With ``q = n / m`` every term ``vx^i vy^j`` must satisfy ``i <= n - j*q``
    and the coefficient of ``vy^m`` must be a unit of the coefficient ring.
    ``units="fraction-field"`` accepts any nonzero coefficient (the other
    variables are inverted); ``units="constants"`` requires a rational constant.
    """
    if units not in ("fraction-field", "constants"):
        raise ValueError(f"unknown unit convention {units!r}")
    n, m = f.degree_in(vx), f.degree_in(vy)
    if not m > 0 or not n > m or n % m:
        raise ValueError(f"precondition violated: need deg_{vx} = q*deg_{vy} with q > 1, got {n}, {m}")
    q = n // m
    ix, iy = f.index(vx), f.index(vy)
    bad = sorted((e[ix], e[iy]) for e in f.terms if e[ix] > n - e[iy] * q)
    if bad:
        return ShapeCheck(False, q, bad, reason="term-above-bound")
    lead = f.coefficients_in(vy)[m]
    if not lead.free_of(vx):
        return ShapeCheck(False, q, reason="leading-coefficient-not-unit")
    if units == "constants" and not lead.is_constant():
        return ShapeCheck(False, q, reason="leading-coefficient-not-unit")
    return ShapeCheck(True, q)
