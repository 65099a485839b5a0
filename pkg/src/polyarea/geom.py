"""Exact integer geometric primitives.

Every predicate here works on Python ints, so results never depend on
rounding. Points are plain ``(x, y)`` tuples; :class:`Point` is a typed
tuple for the public surface and behaves identically.
"""
from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple, Sequence

COORD_CAP = 1 << 40


class GeometryError(ValueError):
    pass


class AllCollinearError(GeometryError):
    """No simple polygon exists on the given points."""


class Point(NamedTuple):
    x: int
    y: int


class Segment(NamedTuple):
    a: tuple[int, int]
    b: tuple[int, int]


def make_point(x: int, y: int) -> Point:
    if abs(x) > COORD_CAP or abs(y) > COORD_CAP:
        raise GeometryError(f"coordinate ({x}, {y}) exceeds cap 2^40")
    return Point(int(x), int(y))


def make_segment(a, b) -> Segment:
    if a[0] == b[0] and a[1] == b[1]:
        raise GeometryError(f"zero-length segment at {tuple(a)}")
    return Segment(a, b)


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def cross(o, a, b) -> int:
    """Twice the signed area of triangle (o, a, b)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orient(a, b, c) -> int:
    """Sign of ``cross(a, b, c)`` as -1, 0 or 1."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def orientation(a, b, c) -> Orientation:
    return Orientation(orient(a, b, c))


def on_segment(p, a, b) -> bool:
    """True if ``p`` lies on the closed segment ``ab`` (assumes nothing about collinearity)."""
    if cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_interact(s1, s2) -> bool:
    """True iff the closed segments share at least one point."""
    p, q = s1
    r, s = s2
    d1 = orient(p, q, r)
    d2 = orient(p, q, s)
    d3 = orient(r, s, p)
    d4 = orient(r, s, q)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and _in_box(r, p, q):
        return True
    if d2 == 0 and _in_box(s, p, q):
        return True
    if d3 == 0 and _in_box(p, r, s):
        return True
    if d4 == 0 and _in_box(q, r, s):
        return True
    return False


def _in_box(p, a, b) -> bool:
    # p is known collinear with a, b
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def edges_conflict(p, q, r, s) -> bool:
    """Would polygon edges ``pq`` and ``rs`` violate simplicity?

    Edges sharing one endpoint may only meet at that endpoint; edges with
    no shared endpoint must be disjoint. Identical edges always conflict.
    """
    if p == r:
        if q == s:
            return True
        return _overlap_at(p, q, s)
    if p == s:
        if q == r:
            return True
        return _overlap_at(p, q, r)
    if q == r:
        return _overlap_at(q, p, s)
    if q == s:
        return _overlap_at(q, p, r)
    return segments_interact((p, q), (r, s))


def _overlap_at(shared, u, v) -> bool:
    # edges shared-u and shared-v overlap beyond the common point iff they are
    # collinear and point the same way
    if cross(shared, u, v) != 0:
        return False
    return (u[0] - shared[0]) * (v[0] - shared[0]) + (u[1] - shared[1]) * (v[1] - shared[1]) > 0


def twice_signed_area(vertices: Sequence) -> int:
    n = len(vertices)
    if n < 3:
        raise GeometryError("a polygon needs at least 3 vertices")
    total = 0
    px, py = vertices[-1]
    for x, y in vertices:
        total += px * y - x * py
        px, py = x, y
    return total


def convex_hull(points: Sequence) -> list[int]:
    """Indices of the strict hull vertices in counter-clockwise order.

    Monotone chain over the lexicographic sort; points in the relative
    interior of hull edges are dropped.
    """
    n = len(points)
    if n < 3:
        raise GeometryError("convex hull needs at least 3 points")
    idx = sorted(range(n), key=points.__getitem__)

    def chain(seq):
        out: list[int] = []
        for i in seq:
            p = points[i]
            while len(out) >= 2 and cross(points[out[-2]], points[out[-1]], p) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(idx)
    upper = chain(reversed(idx))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise AllCollinearError("all points are collinear")
    return hull
