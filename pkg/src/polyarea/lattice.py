"""Lattice-point accounting on integer polygons and the hull area bounds."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import gcd

from .geom import convex_hull, cross, twice_signed_area
from .polygon import Instance, NonSimplePolygonError, Polygonization, is_simple


@dataclass(frozen=True)
class LatticeStats:
    b: int
    i: int
    area2: int


@dataclass(frozen=True)
class HullGap:
    h_b: int
    h_i: int


def ring_boundary_count(vertices) -> int:
    """Lattice points on the closed boundary of the vertex ring."""
    total = 0
    px, py = vertices[-1]
    for x, y in vertices:
        total += gcd(x - px, y - py)
        px, py = x, y
    return total


def _require_simple(poly: Polygonization, inst: Instance) -> None:
    res = is_simple(poly, inst)
    if not res.simple:
        raise NonSimplePolygonError(f"polygon is not simple: {res.witness}")


def boundary_lattice_count(poly: Polygonization, inst: Instance, verify: bool = True) -> int:
    if verify:
        _require_simple(poly, inst)
    return ring_boundary_count(poly.vertices(inst))


def interior_lattice_count(poly: Polygonization, inst: Instance, verify: bool = True) -> int:
    return lattice_stats(poly, inst, verify).i


def lattice_stats(poly: Polygonization, inst: Instance, verify: bool = True) -> LatticeStats:
    if verify:
        _require_simple(poly, inst)
    ring = poly.vertices(inst)
    area2 = abs(twice_signed_area(ring))
    b = ring_boundary_count(ring)
    twice_i = area2 - b + 2
    assert twice_i >= 0 and twice_i % 2 == 0, "Pick inversion failed on a simple polygon"
    return LatticeStats(b=b, i=twice_i // 2, area2=area2)


def hull_area2(inst: Instance, hull: list[int] | None = None) -> int:
    if hull is None:
        hull = convex_hull(inst.points)
    return twice_signed_area([inst.points[i] for i in hull])


def boundary_membership(points, hull: list[int]) -> list[bool]:
    """For each point, whether it lies on the hull boundary.

    Uses the lower and upper chains as x-monotone lookups, O(n log h).
    """
    ring = [points[i] for i in hull]
    lo = min(range(len(ring)), key=ring.__getitem__)
    hi = max(range(len(ring)), key=ring.__getitem__)
    m = len(ring)
    lower = [ring[(lo + k) % m] for k in range((hi - lo) % m + 1)]
    upper = [ring[(hi + k) % m] for k in range((lo - hi) % m + 1)][::-1]
    xmin, xmax = ring[lo][0], ring[hi][0]
    lx = [p[0] for p in lower]
    ux = [p[0] for p in upper]

    def on_chain(p, chain, xs):
        k = bisect_left(xs, p[0])
        if k < len(xs) and xs[k] == p[0]:
            # at a chain vertex column: the vertex itself or nowhere on this chain
            return chain[k][1] == p[1] or (k + 1 < len(xs) and xs[k + 1] == p[0]
                                           and min(chain[k][1], chain[k + 1][1]) <= p[1] <= max(chain[k][1], chain[k + 1][1]))
        if k == 0 or k == len(xs):
            return False
        return cross(chain[k - 1], chain[k], p) == 0

    out = []
    for p in points:
        if p[0] == xmin or p[0] == xmax:
            out.append(True)
        else:
            out.append(on_chain(p, lower, lx) or on_chain(p, upper, ux))
    return out


def hull_gap(inst: Instance) -> HullGap:
    pts = inst.points
    hull = convex_hull(pts)
    ring = [pts[i] for i in hull]
    a2 = twice_signed_area(ring)
    bh = ring_boundary_count(ring)
    ih = (a2 - bh + 2) // 2
    on_b = sum(boundary_membership(pts, hull))
    return HullGap(h_b=bh - on_b, h_i=ih - (inst.n - on_b))


def area_bounds2(inst: Instance) -> tuple[int, int]:
    """Twice-area bounds ``(n - 2, n + h_b + 2 h_i - 2)`` valid for every polygonization."""
    g = hull_gap(inst)
    n = inst.n
    return n - 2, n + g.h_b + 2 * g.h_i - 2
