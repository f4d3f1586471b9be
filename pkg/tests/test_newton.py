from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, XYZ
from rank2lnd.newton import NewtonPolygon, convex_hull, grnp_shape_check, kernel_triangle_check, newton_polygon
from rank2lnd.poly import Polynomial


def test_newton_polygon_examples():
    np_ = newton_polygon(P("Y^3 + X^2*Z"), "Y", "Z")
    assert np_.points == {(0, 0), (3, 0), (0, 1)}
    assert set(np_.hull) == {(0, 0), (3, 0), (0, 1)}
    assert newton_polygon(P("1"), "Y", "Z").hull == ((0, 0),)
    np_ = newton_polygon(P("Y^4 + 2*X*Y^2*Z + X^2*Z^2 + X^3*Y"), "Y", "Z")
    assert np_.hull == ((0, 0), (4, 0), (0, 2))
    with pytest.raises(ValueError):
        newton_polygon(Polynomial.zero(XYZ), "Y", "Z")


def _triangle(*pts):
    return NewtonPolygon(frozenset(pts), convex_hull(pts))


def test_kernel_triangle_examples():
    res = kernel_triangle_check(_triangle((0, 0), (3, 0), (0, 1)))
    assert res.passed and (res.m, res.n, res.divides) == (3, 1, "n|m")
    res = kernel_triangle_check(_triangle((0, 0), (4, 0), (0, 2)))
    assert res.passed and res.divides == "n|m"
    res = kernel_triangle_check(_triangle((0, 0), (4, 0), (2, 3), (0, 1)))
    assert not res.passed and res.reason == "not-axis-triangle"


def test_kernel_triangle_degenerate_cases():
    assert kernel_triangle_check(newton_polygon(P("X^3"), "Y", "Z")).reason == "constant"
    res = kernel_triangle_check(newton_polygon(P("Y^3"), "Y", "Z"))
    assert res.passed and (res.m, res.n) == (3, 0)
    res = kernel_triangle_check(newton_polygon(P("Y^2 + Z^3"), "Y", "Z"))
    assert not res.passed and res.reason == "legs-not-divisible"
    res = kernel_triangle_check(newton_polygon(P("Y*Z"), "Y", "Z"))
    assert not res.passed and res.reason == "segment-off-axis"


def test_grnp_shape_examples():
    res = grnp_shape_check(P("Y^4 + 2*X*Y^2*Z + X^2*Z^2"), "Y", "Z")
    assert res.passed and res.q == 2
    res = grnp_shape_check(P("Y^4 + Y^3*Z"), "Y", "Z")
    assert not res.passed and res.violations == [(3, 1)]
    res = grnp_shape_check(P("Y^2 + X*Z"), "Y", "Z")
    assert res.passed and res.q == 2


def test_grnp_units_conventions():
    f = P("Y^4 + X^2*Z^2")
    assert grnp_shape_check(f, "Y", "Z").passed
    assert grnp_shape_check(f, "Y", "Z", units="constants").reason == "leading-coefficient-not-unit"
    assert grnp_shape_check(P("Y^4 + Z^2"), "Y", "Z", units="constants").passed
    with pytest.raises(ValueError):
        grnp_shape_check(P("Y^3 + Z^2"), "Y", "Z")
    with pytest.raises(ValueError):
        grnp_shape_check(f, "Y", "Z", units="ring")


def _brute_force_hull(points):
    """Vertices = points that are not in the convex hull of the others (all-triples test)."""
    pts = sorted(set(points))

    def in_triangle(p, a, b, c):
        def cross(o, u, v):
            return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])
        if cross(a, b, c) == 0:
            return False  # degenerate triples are covered by the segment test
        d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
        neg = d1 < 0 or d2 < 0 or d3 < 0
        pos = d1 > 0 or d2 > 0 or d3 > 0
        return not (neg and pos)

    def on_segment(p, a, b):
        cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
        return cross == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])

    out = set()
    for p in pts:
        others = [q for q in pts if q != p]
        covered = any(on_segment(p, a, b) for a, b in combinations(others, 2))
        covered = covered or any(in_triangle(p, a, b, c) for a, b, c in combinations(others, 3))
        if not covered:
            out.add(p)
    return out


@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=12))
@settings(max_examples=150, deadline=None)
def test_hull_matches_brute_force(points):
    hull = convex_hull(points)
    assert set(hull) == _brute_force_hull(points)
    if len(hull) >= 3:
        n = len(hull)
        for i in range(n):
            o, a, b = hull[i], hull[(i + 1) % n], hull[(i + 2) % n]
            assert (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) > 0


@given(st.dictionaries(st.tuples(*(st.integers(0, 3) for _ in XYZ)), st.integers(1, 5), min_size=1, max_size=5),
       st.integers(0, 3))
@settings(max_examples=50, deadline=None)
def test_newton_polygon_ignores_coefficient_ring_factors(terms, k):
    f = Polynomial(XYZ, terms)
    g = f * (Polynomial.variable("X", XYZ) ** k * 3 + 1)
    assert newton_polygon(f, "Y", "Z").points == newton_polygon(g, "Y", "Z").points
