"""Polygonization constructors.

* :func:`star_polygonization` - angular sweep around a hull vertex.
* :func:`max_area_approx` - best star over all hull anchors, with a
  constructive fallback whenever no star reaches half the hull area.
* :func:`greedy_insertion` - grow from the hull by best single-point
  insertions.
* :func:`random_polygonization` - seeded random growth.
"""
from __future__ import annotations

import heapq
import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from .engine import PolygonState, _key
from .geom import convex_hull, cross, edges_conflict, GeometryError
from .lattice import hull_area2
from .polygon import Instance, Objective, Polygonization, order_area2

log = logging.getLogger(__name__)

# below this size greedy considers every (point, edge) pair
EXHAUSTIVE_GREEDY_MAX = 600


class ConstructionError(GeometryError):
    pass


@dataclass(frozen=True)
class AngularOrder:
    anchor: int
    sequence: tuple[int, ...]


def hull_neighbors(hull: list[int], anchor: int) -> tuple[int, int]:
    """``(next, previous)`` of ``anchor`` along the counter-clockwise hull."""
    k = hull.index(anchor)
    return hull[(k + 1) % len(hull)], hull[k - 1]


def angular_order(inst: Instance, anchor: int, hull: list[int] | None = None) -> AngularOrder:
    """Sort the other points counter-clockwise around hull vertex ``anchor``.

    The sweep starts on the ray towards the next hull vertex and ends on
    the ray towards the previous one. Points sharing a ray are taken in
    increasing distance, except on the closing ray, where they come in
    decreasing distance so the final edge back to the anchor does not run
    over them.

    Comparisons are exact: every point lies in the cone spanned by the two
    hull edges at the anchor (opening below pi), and its angle from the
    first ray is ordered by the rational cotangent ``dot / cross``, which
    becomes an integer key after scaling by the squared largest
    denominator.
    """
    pts = inst.points
    if hull is None:
        hull = convex_hull(pts)
    if anchor not in hull:
        raise ConstructionError(f"anchor {anchor} is not a hull vertex")
    first, _ = hull_neighbors(hull, anchor)
    ax, ay = pts[anchor]
    rx, ry = pts[first][0] - ax, pts[first][1] - ay
    rows = []
    cmax = 1
    for i, (x, y) in enumerate(pts):
        if i == anchor:
            continue
        dx, dy = x - ax, y - ay
        c = rx * dy - ry * dx
        d = rx * dx + ry * dy
        if c > cmax:
            cmax = c
        rows.append((c, d, dx * dx + dy * dy, i))
    scale = cmax * cmax
    keyed = []
    for c, d, r2, i in rows:
        if c == 0:
            keyed.append((0, 0, r2, i))
        else:
            keyed.append((1, -((d * scale) // c), r2, i))
    keyed.sort()
    seq = [k[3] for k in keyed]
    # reverse the closing ray group
    last = keyed[-1][:2]
    j = len(keyed) - 1
    while j > 0 and keyed[j - 1][:2] == last:
        j -= 1
    seq[j:] = seq[j:][::-1]
    return AngularOrder(anchor, tuple(seq))


def star_polygonization(inst: Instance, anchor: int, hull: list[int] | None = None) -> Polygonization:
    ao = angular_order(inst, anchor, hull)
    return Polygonization(inst.id, (anchor,) + ao.sequence)


def best_star(inst: Instance, hull: list[int] | None = None) -> tuple[Polygonization, int]:
    """Star polygon of largest area over every hull anchor, ties to the lowest anchor index."""
    pts = inst.points
    if hull is None:
        hull = convex_hull(pts)
    best = None
    for anchor in sorted(hull):
        poly = star_polygonization(inst, anchor, hull)
        a2 = abs(order_area2(pts, poly.order))
        if best is None or a2 > best[1]:
            best = (poly, a2)
    return best


def max_area_approx(inst: Instance, hc_moves: int = 200_000, seed: int = 0) -> Polygonization:
    """A simple polygonization with area strictly above half the hull area."""
    hull = convex_hull(inst.points)
    hull2 = hull_area2(inst, hull)
    poly, a2 = best_star(inst, hull)
    if 2 * a2 > hull2:
        return poly
    log.info("best star covers %s of the hull; using insertion fallback", Fraction(a2, hull2))
    cand = greedy_insertion(inst, Objective.MAX)
    c2 = abs(order_area2(inst.points, cand.order))
    if c2 > a2:
        poly, a2 = cand, c2
    if 2 * a2 > hull2:
        return poly
    from .optimize import SearchBudget, hill_climb

    budget = SearchBudget(max_moves=hc_moves, seed=seed)
    poly = hill_climb(poly, inst, Objective.MAX, budget)
    a2 = abs(order_area2(inst.points, poly.order))
    if 2 * a2 <= hull2:
        raise ConstructionError("could not exceed half of the hull area")
    return poly


def _ccw_state(inst: Instance, order, cells=None) -> PolygonState:
    pts = inst.points
    if order_area2(pts, order) < 0:
        order = order[::-1]
    return PolygonState.from_order(pts, list(order), cells)


def greedy_insertion(inst: Instance, objective: Objective | str, exhaustive: bool | None = None) -> Polygonization:
    """Grow the hull polygon by repeated best single-point insertions.

    Each step inserts an unused point ``p`` between adjacent vertices
    ``a -> b``, changing the area by the signed triangle ``(a, p, b)``. MIN
    takes the most negative change, MAX the largest; ties go to the
    smallest ``(point, a)`` pair. Only insertions keeping the polygon simple
    qualify.

    With ``exhaustive`` (default for small inputs) every pair is a
    candidate. Otherwise a point is only paired with edges passing through
    the grid cells around it; points left over are retried against every
    edge before giving up.
    """
    objective = Objective(objective)
    pts = inst.points
    n = inst.n
    hull = convex_hull(pts)
    st = _ccw_state(inst, hull)
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_GREEDY_MAX
    sign = 1 if objective is Objective.MIN else -1
    unused = set(range(n)) - set(hull)
    if not unused:
        return Polygonization(inst.id, st.order(hull[0]))

    nxt = st.nxt
    heap: list = []
    blocked: dict = {}

    def push(p, a):
        heapq.heappush(heap, (sign * st.insert_delta(p, a), p, a, nxt[a]))

    if exhaustive:
        for p in unused:
            for a in hull:
                push(p, a)
    else:
        ptgrid = _PointGrid(st.grid, unused, pts)
        for a in hull:
            for p in ptgrid.near_segment(pts[a], pts[nxt[a]]):
                push(p, a)

    def after_insert(p, a, b, removed):
        if exhaustive:
            for q in unused:
                push(q, a)
                push(q, p)
        else:
            ptgrid.discard(p)
            for u, v in ((a, p), (p, b)):
                for q in ptgrid.near_segment(pts[u], pts[v]):
                    push(q, u)
        for item in blocked.pop(removed, ()):
            heapq.heappush(heap, item)

    def drain():
        while heap:
            item = heapq.heappop(heap)
            _, p, a, b = item
            if p not in unused or nxt[a] != b:
                continue
            skip = (_key(a, b),)
            blk = st.blocker(p, a, skip)
            if blk is None:
                blk = st.blocker(p, b, skip)
                if blk is None and edges_conflict(pts[p], pts[b], pts[a], pts[p]):
                    continue
            if blk is not None:
                blocked.setdefault(blk, []).append(item)
                continue
            st.insert(p, a)
            unused.discard(p)
            after_insert(p, a, b, _key(a, b))

    drain()
    log.info("greedy: %d of %d points placed by local insertion", n - len(unused), n)
    if unused and not exhaustive:
        # leftovers: widen to every edge
        for p in sorted(unused):
            for a in st.order():
                push(p, a)
        exhaustive = True
        drain()
    if unused:
        log.info("greedy: rescuing %d points", len(unused))
    for widen in (False, True):
        for p in sorted(unused):
            if _rescue(st, p, sign, widen):
                unused.discard(p)
    if unused:
        log.warning("greedy insertion stuck with %d points; using random polygonization", len(unused))
        return random_polygonization(inst, 0)
    return Polygonization(inst.id, st.order(min(hull)))


def _best_insertion(st: PolygonState, p: int, sign: int, rings=(2, 5), widen: bool = True):
    """Feasible edge start for ``p`` with the best signed delta, looking nearby first."""
    nxt = st.nxt
    scopes = [st.grid.near_point(st.pts[p], r) for r in rings]
    if widen:
        scopes.append(None)
    for edges in scopes:
        if edges is None:
            starts = st.order()
        else:
            starts = [u if nxt[u] == v else v for u, v in edges]
        for _, a in sorted((sign * st.insert_delta(p, a), a) for a in starts):
            if st.can_insert(p, a):
                return a
    return None


def _rescue(st: PolygonState, p: int, sign: int, widen: bool = False) -> bool:
    """Insert a point no edge admits by lifting a nearby vertex out of the way.

    The lifted vertex is reinserted wherever it fits best; on failure the
    polygon is restored exactly.
    """
    pts = st.pts
    px, py = pts[p]
    verts = {u for e in st.grid.near_point(pts[p], 2) for u in e}
    for x in sorted(verts, key=lambda v: ((pts[v][0] - px) ** 2 + (pts[v][1] - py) ** 2, v)):
        if not st.can_remove(x):
            continue
        u = st.remove(x)
        a = _best_insertion(st, p, sign, widen=widen)
        if a is not None:
            st.insert(p, a)
            b = _best_insertion(st, x, sign, widen=widen)
            if b is not None:
                st.insert(x, b)
                return True
            st.remove(p)
        st.insert(x, u)
    return False


class _PointGrid:
    """Unused points bucketed on the edge grid's cells."""

    def __init__(self, grid, ids, pts):
        self.grid = grid
        self.pts = pts
        self.cells: dict = {}
        self.where: dict = {}
        for i in ids:
            c = grid.cell_of(pts[i])
            self.cells.setdefault(c, set()).add(i)
            self.where[i] = c

    def discard(self, i):
        c = self.where.pop(i, None)
        if c is not None:
            s = self.cells[c]
            s.discard(i)
            if not s:
                del self.cells[c]

    def near_segment(self, p, q, ring: int = 1):
        seen = set()
        out = []
        cells = self.cells
        for cx, cy in self.grid.segment_cells(p, q):
            for i in range(cx - ring, cx + ring + 1):
                for j in range(cy - ring, cy + ring + 1):
                    if (i, j) in seen:
                        continue
                    seen.add((i, j))
                    s = cells.get((i, j))
                    if s:
                        out.extend(s)
        return out

    def near_point(self, p, ring: int = 1):
        cx, cy = self.grid.cell_of(p)
        out = []
        for i in range(cx - ring, cx + ring + 1):
            for j in range(cy - ring, cy + ring + 1):
                s = self.cells.get((i, j))
                if s:
                    out.extend(s)
        return out


def random_polygonization(inst: Instance, seed: int) -> Polygonization:
    """Seeded random growth from a random triangle.

    Unused points near the current boundary form a frontier; each step
    takes a random frontier point and joins it through a random feasible
    edge nearby. A point that fails goes dormant until a new edge appears
    near it. Leftovers are tried against every edge; if growth stalls
    completely the star polygon of a random hull anchor is returned.
    """
    pts = inst.points
    n = inst.n
    hull = convex_hull(pts)
    rng = random.Random(seed)
    st = PolygonState(pts)
    ptgrid = _PointGrid(st.grid, range(n), pts)
    a = rng.randrange(n)
    near = sorted(ptgrid.near_point(pts[a], 1))
    rng.shuffle(near)
    tri = None
    for b in near + [i for i in range(n)]:
        if b == a:
            continue
        for c in near + [i for i in range(n)]:
            if c != a and c != b and cross(pts[a], pts[b], pts[c]) != 0:
                tri = [a, b, c] if cross(pts[a], pts[b], pts[c]) > 0 else [a, c, b]
                break
        if tri:
            break
    for u, v in zip(tri, tri[1:] + tri[:1]):
        st.nxt[u] = v
        st.prv[v] = u
        st.grid.add(_key(u, v), pts[u], pts[v])
    st.area2 = cross(pts[tri[0]], pts[tri[1]], pts[tri[2]])
    st.size = 3
    for i in tri:
        ptgrid.discard(i)

    frontier: list[int] = []
    in_front = bytearray(n)

    def wake(u, v):
        for q in ptgrid.near_segment(pts[u], pts[v]):
            if not in_front[q]:
                in_front[q] = 1
                frontier.append(q)

    for u in tri:
        wake(u, st.nxt[u])
    remaining = n - 3
    while remaining:
        while frontier:
            k = rng.randrange(len(frontier))
            p = frontier[k]
            frontier[k] = frontier[-1]
            frontier.pop()
            in_front[p] = 0
            if st.nxt[p] != -1:
                continue
            cand = sorted(st.grid.near_point(pts[p], 1))
            rng.shuffle(cand)
            for u, v in cand:
                x = u if st.nxt[u] == v else v
                if st.can_insert(p, x):
                    y = st.nxt[x]
                    st.insert(p, x)
                    ptgrid.discard(p)
                    remaining -= 1
                    wake(x, p)
                    wake(p, y)
                    break
        if not remaining:
            break
        progress = False
        left = sorted(ptgrid.where)
        rng.shuffle(left)
        for p in left:
            edges = st.order()
            rng.shuffle(edges)
            for x in edges:
                if st.can_insert(p, x):
                    y = st.nxt[x]
                    st.insert(p, x)
                    ptgrid.discard(p)
                    remaining -= 1
                    wake(x, p)
                    wake(p, y)
                    progress = True
                    break
            if progress:
                break
        if not progress:
            log.warning("random growth stalled; falling back to a star polygon")
            return star_polygonization(inst, hull[rng.randrange(len(hull))], hull)
    return Polygonization(inst.id, st.order(min(range(n), key=pts.__getitem__)))
