"""Mutable polygon with a uniform edge grid for local feasibility checks.

The polygon is a doubly linked cycle over point indices (``nxt``/``prv``,
``-1`` for points not yet on the boundary). Every edge is registered in
all grid cells its closed segment touches, so any two segments that
share a point share a cell; a feasibility check for a new edge only
looks at edges in the cells the new edge covers.

``area2`` is the signed shoelace sum, maintained exactly move by move.
"""
from __future__ import annotations

from math import isqrt

from .geom import cross, edges_conflict


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class EdgeGrid:
    def __init__(self, points, cells: int | None = None):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.ox = min(xs)
        self.oy = min(ys)
        span = max(max(xs) - self.ox, max(ys) - self.oy, 1)
        side = cells if cells is not None else max(1, isqrt(len(points)))
        self.cs = max(1, -(-span // side))
        self.cells: dict[tuple[int, int], set] = {}

    def cell_of(self, p) -> tuple[int, int]:
        return ((p[0] - self.ox) // self.cs, (p[1] - self.oy) // self.cs)

    def segment_cells(self, p, q):
        """Cells whose closed square meets the closed segment ``pq``."""
        cs = self.cs
        x0, y0 = p[0] - self.ox, p[1] - self.oy
        x1, y1 = q[0] - self.ox, q[1] - self.oy
        if x0 > x1:
            x0, y0, x1, y1 = x1, y1, x0, y0
        c0 = x0 // cs
        c1 = x1 // cs
        if c0 == c1:
            r0 = min(y0, y1) // cs
            r1 = max(y0, y1) // cs
            return [(c0, r) for r in range(r0, r1 + 1)]
        dx = x1 - x0
        dy = y1 - y0
        den = dx * cs
        out = []
        base = y0 * dx
        for c in range(c0, c1 + 1):
            xa = c * cs
            if xa < x0:
                xa = x0
            xb = (c + 1) * cs
            if xb > x1:
                xb = x1
            ya = base + (xa - x0) * dy
            yb = base + (xb - x0) * dy
            if ya > yb:
                ya, yb = yb, ya
            for r in range(ya // den, yb // den + 1):
                out.append((c, r))
        return out

    def walk(self, p, q):
        """The cells of :meth:`segment_cells`, lazily, in order from ``p`` to ``q``."""
        cs = self.cs
        x0, y0 = p[0] - self.ox, p[1] - self.oy
        x1, y1 = q[0] - self.ox, q[1] - self.oy
        up = y1 >= y0
        forward = x0 <= x1
        if not forward:
            x0, y0, x1, y1 = x1, y1, x0, y0
        c0 = x0 // cs
        c1 = x1 // cs
        if c0 == c1:
            r0 = min(y0, y1) // cs
            r1 = max(y0, y1) // cs
            rows = range(r0, r1 + 1) if up else range(r1, r0 - 1, -1)
            for r in rows:
                yield c0, r
            return
        dx = x1 - x0
        dy = y1 - y0
        den = dx * cs
        base = y0 * dx
        cols = range(c0, c1 + 1) if forward else range(c1, c0 - 1, -1)
        for c in cols:
            xa = c * cs
            if xa < x0:
                xa = x0
            xb = (c + 1) * cs
            if xb > x1:
                xb = x1
            ya = base + (xa - x0) * dy
            yb = base + (xb - x0) * dy
            if ya > yb:
                ya, yb = yb, ya
            r0 = ya // den
            r1 = yb // den
            rows = range(r0, r1 + 1) if up else range(r1, r0 - 1, -1)
            for r in rows:
                yield c, r

    def add(self, key, p, q):
        cells = self.cells
        for c in self.segment_cells(p, q):
            s = cells.get(c)
            if s is None:
                cells[c] = {key}
            else:
                s.add(key)

    def remove(self, key, p, q):
        cells = self.cells
        for c in self.segment_cells(p, q):
            s = cells[c]
            s.discard(key)
            if not s:
                del cells[c]

    def near_segment(self, p, q) -> set:
        found: set = set()
        cells = self.cells
        for c in self.segment_cells(p, q):
            s = cells.get(c)
            if s:
                found |= s
        return found

    def near_point(self, p, ring: int = 1) -> set:
        cx, cy = self.cell_of(p)
        found: set = set()
        cells = self.cells
        for i in range(cx - ring, cx + ring + 1):
            for j in range(cy - ring, cy + ring + 1):
                s = cells.get((i, j))
                if s:
                    found |= s
        return found


class PolygonState:
    """Simple polygon under construction or local search."""

    def __init__(self, points, cells: int | None = None):
        self.pts = points
        n = len(points)
        self.n = n
        self.nxt = [-1] * n
        self.prv = [-1] * n
        self.grid = EdgeGrid(points, cells)
        self.area2 = 0
        self.size = 0

    @classmethod
    def from_order(cls, points, order, cells: int | None = None) -> "PolygonState":
        st = cls(points, cells)
        m = len(order)
        P = points
        total = 0
        for k in range(m):
            u = order[k]
            v = order[(k + 1) % m]
            st.nxt[u] = v
            st.prv[v] = u
            st.grid.add(_key(u, v), P[u], P[v])
            total += P[u][0] * P[v][1] - P[v][0] * P[u][1]
        st.area2 = total
        st.size = m
        return st

    # -- queries -----------------------------------------------------------

    def order(self, start: int | None = None) -> list[int]:
        if start is None:
            start = next(i for i in range(self.n) if self.nxt[i] != -1)
        out = [start]
        nxt = self.nxt
        v = nxt[start]
        while v != start:
            out.append(v)
            v = nxt[v]
        return out

    def on_polygon(self, v: int) -> bool:
        return self.nxt[v] != -1

    def clear(self, p: int, q: int, skip=(), extra=()) -> bool:
        """Can segment ``p q`` join the polygon without violating simplicity?

        ``skip`` holds edge keys about to be removed; ``extra`` holds
        ``(u, v)`` pairs about to be added alongside this one.
        """
        P = self.pts
        a, b = P[p], P[q]
        for u, v in extra:
            if edges_conflict(a, b, P[u], P[v]):
                return False
        return self.blocker(p, q, skip) is None

    def blocker(self, p: int, q: int, skip=()):
        """First existing edge conflicting with segment ``p q``, or ``None``."""
        P = self.pts
        a, b = P[p], P[q]
        cells = self.grid.cells
        seen = set(skip)
        # walking out from p finds a nearby blocker without listing every cell
        for c in self.grid.walk(a, b):
            s = cells.get(c)
            if not s:
                continue
            for key in s:
                if key in seen:
                    continue
                seen.add(key)
                if edges_conflict(a, b, P[key[0]], P[key[1]]):
                    return key
        return None

    # -- insertion ---------------------------------------------------------

    def insert_delta(self, p: int, a: int) -> int:
        P = self.pts
        return cross(P[a], P[p], P[self.nxt[a]])

    def can_insert(self, p: int, a: int) -> bool:
        b = self.nxt[a]
        skip = (_key(a, b),)
        return (self.clear(a, p, skip)
                and self.clear(p, b, skip, ((a, p),)))

    def insert(self, p: int, a: int) -> None:
        """Put unused point ``p`` between ``a`` and its successor."""
        P = self.pts
        b = self.nxt[a]
        self.area2 += cross(P[a], P[p], P[b])
        g = self.grid
        g.remove(_key(a, b), P[a], P[b])
        g.add(_key(a, p), P[a], P[p])
        g.add(_key(p, b), P[p], P[b])
        self.nxt[a] = p
        self.prv[p] = a
        self.nxt[p] = b
        self.prv[b] = p
        self.size += 1

    def can_remove(self, v: int) -> bool:
        if self.size <= 3:
            return False
        u, w = self.prv[v], self.nxt[v]
        return self.clear(u, w, (_key(u, v), _key(v, w)))

    def remove(self, v: int) -> int:
        """Take ``v`` off the boundary; returns its former predecessor."""
        P = self.pts
        nxt, prv, g = self.nxt, self.prv, self.grid
        u, w = prv[v], nxt[v]
        self.area2 += cross(P[u], P[w], P[v])
        g.remove(_key(u, v), P[u], P[v])
        g.remove(_key(v, w), P[v], P[w])
        g.add(_key(u, w), P[u], P[w])
        nxt[u] = w
        prv[w] = u
        nxt[v] = prv[v] = -1
        self.size -= 1
        return u

    # -- relocation --------------------------------------------------------

    def relocate_delta(self, v: int, a: int) -> int:
        """Signed area change of moving ``v`` between ``a`` and ``nxt[a]``."""
        P = self.pts
        u, w = self.prv[v], self.nxt[v]
        b = self.nxt[a]
        return cross(P[u], P[w], P[v]) + cross(P[a], P[v], P[b])

    def can_relocate(self, v: int, a: int) -> bool:
        u, w = self.prv[v], self.nxt[v]
        b = self.nxt[a]
        if a == v or b == v or self.size < 4:
            return False
        skip = (_key(u, v), _key(v, w), _key(a, b))
        return (self.clear(u, w, skip)
                and self.clear(a, v, skip, ((u, w),))
                and self.clear(v, b, skip, ((u, w), (a, v))))

    def relocate(self, v: int, a: int) -> None:
        P = self.pts
        nxt, prv, g = self.nxt, self.prv, self.grid
        u, w = prv[v], nxt[v]
        b = nxt[a]
        self.area2 += cross(P[u], P[w], P[v]) + cross(P[a], P[v], P[b])
        g.remove(_key(u, v), P[u], P[v])
        g.remove(_key(v, w), P[v], P[w])
        g.remove(_key(a, b), P[a], P[b])
        g.add(_key(u, w), P[u], P[w])
        g.add(_key(a, v), P[a], P[v])
        g.add(_key(v, b), P[v], P[b])
        nxt[u] = w
        prv[w] = u
        nxt[a] = v
        prv[v] = a
        nxt[v] = b
        prv[b] = v

    # -- 2-opt ------------------------------------------------------------

    def path_sum(self, b: int, c: int) -> int:
        """Shoelace terms along the path ``b -> ... -> c``."""
        P = self.pts
        nxt = self.nxt
        total = 0
        x = b
        while x != c:
            y = nxt[x]
            total += P[x][0] * P[y][1] - P[y][0] * P[x][1]
            x = y
        return total

    def two_opt_delta(self, a: int, c: int, path: int | None = None) -> int:
        """Signed area change of replacing ``a->b`` and ``c->d`` by ``a->c`` and ``b->d``."""
        P = self.pts
        b = self.nxt[a]
        d = self.nxt[c]
        if path is None:
            path = self.path_sum(b, c)
        pa, pb, pc, pd = P[a], P[b], P[c], P[d]
        return (-(pa[0] * pb[1] - pb[0] * pa[1]) - (pc[0] * pd[1] - pd[0] * pc[1])
                + (pa[0] * pc[1] - pc[0] * pa[1]) + (pb[0] * pd[1] - pd[0] * pb[1])
                - 2 * path)

    def can_two_opt(self, a: int, c: int) -> bool:
        b = self.nxt[a]
        d = self.nxt[c]
        if c == a or c == b or d == a:
            return False
        skip = (_key(a, b), _key(c, d))
        return self.clear(a, c, skip) and self.clear(b, d, skip, ((a, c),))

    def two_opt(self, a: int, c: int, path: int | None = None) -> None:
        P = self.pts
        nxt, prv, g = self.nxt, self.prv, self.grid
        b = nxt[a]
        d = nxt[c]
        self.area2 += self.two_opt_delta(a, c, path)
        g.remove(_key(a, b), P[a], P[b])
        g.remove(_key(c, d), P[c], P[d])
        g.add(_key(a, c), P[a], P[c])
        g.add(_key(b, d), P[b], P[d])
        x = b
        while True:
            y = nxt[x]
            nxt[x], prv[x] = prv[x], y
            if x == c:
                break
            x = y
        nxt[a] = c
        prv[c] = a
        nxt[b] = d
        prv[d] = b
