"""Independent reference computations used as test oracles.

Nothing here imports the package under test, so agreement is evidence
rather than tautology.
"""
from __future__ import annotations

from itertools import permutations

from shapely.geometry import LinearRing


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def shoelace2(vertices) -> int:
    n = len(vertices)
    return sum(vertices[k][0] * vertices[(k + 1) % n][1] - vertices[(k + 1) % n][0] * vertices[k][1]
               for k in range(n))


def _on_edge(p, a, b) -> bool:
    return (_cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _inside(p, vertices) -> bool:
    """Even-odd ray cast to the right, exact on integer input (p not on the boundary)."""
    x, y = p
    hit = False
    n = len(vertices)
    for k in range(n):
        a, b = vertices[k], vertices[(k + 1) % n]
        if (a[1] > y) != (b[1] > y):
            # crossing abscissa > x  <=>  sign test on the cross product
            c = _cross(a, b, p)
            if (c > 0) == (b[1] > a[1]):
                hit = not hit
    return hit


def lattice_counts(vertices) -> tuple[int, int]:
    """(boundary, interior) lattice points by enumerating the bounding box."""
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    n = len(vertices)
    b = i = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if any(_on_edge(p, vertices[k], vertices[(k + 1) % n]) for k in range(n)):
                b += 1
            elif _inside(p, vertices):
                i += 1
    return b, i


def shapely_simple(points, order) -> bool:
    return LinearRing([points[k] for k in order]).is_simple


def brute_polygonizations(points) -> set[tuple[int, ...]]:
    """Simple cyclic orders, canonical (start at 0, second < last), by plain permutation."""
    n = len(points)
    out = set()
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        order = (0,) + rest
        if shapely_simple(points, order):
            out.add(order)
    return out


def hull_vertices(points) -> list:
    """Convex hull corners by gift wrapping, counter-clockwise."""
    pts = sorted(set(points))
    start = pts[0]
    hull = [start]
    cur = start
    while True:
        cand = None
        for p in pts:
            if p == cur:
                continue
            if cand is None:
                cand = p
                continue
            c = _cross(cur, cand, p)
            far = (p[0] - cur[0]) ** 2 + (p[1] - cur[1]) ** 2 > (cand[0] - cur[0]) ** 2 + (cand[1] - cur[1]) ** 2
            if c < 0 or (c == 0 and far):
                cand = p
        cur = cand
        if cur == start:
            break
        hull.append(cur)
    return hull


def hull_area2(points) -> int:
    return abs(shoelace2(hull_vertices(points)))


def hull_gap(points) -> tuple[int, int]:
    """Lattice points on the hull boundary / strictly inside it that are not in ``points``."""
    hull = hull_vertices(points)
    b, i = lattice_counts(hull)
    n = len(hull)
    on_b = sum(1 for p in set(points)
               if any(_on_edge(p, hull[k], hull[(k + 1) % n]) for k in range(n)))
    return b - on_b, i - (len(set(points)) - on_b)


def lattice_counts_np(vertices) -> tuple[int, int]:
    """Vectorised twin of :func:`lattice_counts` for larger boxes."""
    import numpy as np

    v = np.asarray(vertices, dtype=np.int64)
    xs = np.arange(v[:, 0].min(), v[:, 0].max() + 1)
    ys = np.arange(v[:, 1].min(), v[:, 1].max() + 1)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    X = X.ravel()
    Y = Y.ravel()
    on = np.zeros(X.shape, dtype=bool)
    inside = np.zeros(X.shape, dtype=bool)
    n = len(v)
    for k in range(n):
        ax, ay = v[k]
        bx, by = v[(k + 1) % n]
        c = (bx - ax) * (Y - ay) - (by - ay) * (X - ax)
        on |= ((c == 0) & (np.minimum(ax, bx) <= X) & (X <= np.maximum(ax, bx))
               & (np.minimum(ay, by) <= Y) & (Y <= np.maximum(ay, by)))
        straddle = (ay > Y) != (by > Y)
        inside ^= straddle & ((c > 0) == (by > ay))
    return int(on.sum()), int((inside & ~on).sum())
