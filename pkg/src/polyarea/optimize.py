"""Local search over simple polygonizations.

Two move kinds act on a :class:`PolygonState`:

* relocate: take vertex ``v`` out from between its neighbours and put it
  between ``a`` and ``nxt[a]``;
* 2-opt: replace edges ``a->b`` and ``c->d`` by ``a->c`` and ``b->d``,
  reversing the path ``b..c``.

Deltas are exact integers. Candidate feasibility is checked against the
edge grid, so a move only tests its new edges against nearby edges. For
small inputs every move is scanned; for large ones a vertex is paired with
edges in the grid cells around it and 2-opt paths are capped in length.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .engine import PolygonState
from .geom import GeometryError
from .polygon import (Instance, NonSimplePolygonError, Objective, Polygonization,
                      check_permutation, is_simple, order_area2)

EXHAUSTIVE_MAX = 200
TWO_OPT_SPAN = 40
NEAR_RING = 1


class MoveKind(str, Enum):
    TWO_OPT = "two_opt"
    RELOCATE = "relocate"


@dataclass(frozen=True)
class Move:
    """A candidate move; ``delta2`` is the change in twice the unsigned area.

    For ``RELOCATE``, ``i`` is the moved vertex and ``j`` the new
    predecessor. For ``TWO_OPT``, ``i`` and ``j`` are the tails ``a`` and
    ``c`` of the two replaced edges.
    """
    kind: MoveKind
    i: int
    j: int
    delta2: int


@dataclass(frozen=True)
class SearchBudget:
    max_millis: int | None = None
    max_moves: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.max_millis is None and self.max_moves is None:
            raise ValueError("a search budget needs a time or move cap")
        for cap in (self.max_millis, self.max_moves):
            if cap is not None and cap < 0:
                raise ValueError("budget caps must be non-negative")


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric cooling. ``t0=None`` means initial twice-area over n and
    ``batch=None`` means n proposals per temperature step."""
    t0: float | None = None
    alpha: float = 0.999
    batch: int | None = None
    stagnation: int = 20

    def __post_init__(self):
        if self.t0 is not None and not self.t0 > 0:
            raise ValueError("initial temperature must be positive")
        if not 0 < self.alpha < 1:
            raise ValueError("cooling factor must lie strictly between 0 and 1")
        if self.batch is not None and self.batch < 1:
            raise ValueError("batch size must be positive")
        if self.stagnation < 1:
            raise ValueError("stagnation limit must be positive")


class _Clock:
    def __init__(self, budget: SearchBudget):
        self.moves = budget.max_moves
        self.deadline = (None if budget.max_millis is None
                         else time.monotonic() + budget.max_millis / 1000)
        self.used = 0

    def tick(self, k: int = 1) -> bool:
        """Count ``k`` moves; False once a cap is exhausted."""
        self.used += k
        if self.moves is not None and self.used > self.moves:
            return False
        return not (self.deadline is not None and time.monotonic() >= self.deadline)


def _start_state(poly: Polygonization, inst: Instance) -> PolygonState:
    check_permutation(poly, inst)
    res = is_simple(poly, inst)
    if not res.simple:
        raise NonSimplePolygonError(f"input polygon is not simple: {res.witness}")
    order = list(poly.order)
    if order_area2(inst.points, order) < 0:
        order.reverse()
    return PolygonState.from_order(inst.points, order)


def _edge_starts(st: PolygonState, v: int, exhaustive: bool) -> list[int]:
    """Tails of the edges ``v`` might be moved into."""
    nxt = st.nxt
    if exhaustive:
        return [a for a in range(st.n) if nxt[a] != -1]
    out = []
    for u, w in st.grid.near_point(st.pts[v], NEAR_RING):
        out.append(u if nxt[u] == w else w)
    out.sort()
    return out


def _relocations(st: PolygonState, v: int, exhaustive: bool) -> Iterator[tuple[int, int]]:
    """``(a, signed delta)`` for every relocation target of ``v``."""
    nxt, prv = st.nxt, st.prv
    u = prv[v]
    for a in _edge_starts(st, v, exhaustive):
        if a == v or a == u:
            continue
        yield a, st.relocate_delta(v, a)


def _two_opts(st: PolygonState, a: int, span: int | None) -> Iterator[tuple[int, int, int]]:
    """``(c, path sum, signed delta)`` walking ``c`` forward from ``a``."""
    P = st.pts
    nxt = st.nxt
    b = nxt[a]
    c = b
    path = 0
    steps = 0
    while True:
        d = nxt[c]
        pc, pd = P[c], P[d]
        path += pc[0] * pd[1] - pd[0] * pc[1]
        c = d
        d = nxt[c]
        if d == a:
            return
        steps += 1
        if span is not None and steps > span:
            return
        yield c, path, st.two_opt_delta(a, c, path)


def _gain(area2: int, delta: int) -> int:
    """Change in unsigned twice-area for a signed change ``delta``."""
    return abs(area2 + delta) - abs(area2)


def propose_moves(poly: Polygonization, inst: Instance, objective: Objective | str,
                  improving_only: bool = True, seed: int | None = None) -> Iterator[Move]:
    """Feasible moves from ``poly``, each with its exact area change.

    Vertices are scanned in index order, or in a shuffled order when
    ``seed`` is given. With ``improving_only`` only moves that help the
    objective are yielded.
    """
    objective = Objective(objective)
    st = _start_state(poly, inst)
    sign = 1 if objective is Objective.MIN else -1
    exhaustive = st.n <= EXHAUSTIVE_MAX
    span = None if exhaustive else TWO_OPT_SPAN
    verts = list(range(st.n))
    if seed is not None:
        random.Random(seed).shuffle(verts)
    for v in verts:
        for a, d in _relocations(st, v, exhaustive):
            g = _gain(st.area2, d)
            if improving_only and sign * g >= 0:
                continue
            if st.can_relocate(v, a):
                yield Move(MoveKind.RELOCATE, v, a, g)
        for c, _, d in _two_opts(st, v, span):
            g = _gain(st.area2, d)
            if improving_only and sign * g >= 0:
                continue
            if st.can_two_opt(v, c):
                yield Move(MoveKind.TWO_OPT, v, c, g)


def apply_move(st: PolygonState, move: Move) -> None:
    if move.kind is MoveKind.RELOCATE:
        st.relocate(move.i, move.j)
    else:
        st.two_opt(move.i, move.j)


def _finish(st: PolygonState, inst: Instance, start: int) -> Polygonization:
    return Polygonization(inst.id, tuple(st.order(start)))


def _improve_at(st: PolygonState, v: int, sign: int, exhaustive: bool, span) -> bool:
    """Apply the first improving move found around ``v``."""
    area2 = st.area2
    for a, d in _relocations(st, v, exhaustive):
        if sign * _gain(area2, d) < 0 and st.can_relocate(v, a):
            st.relocate(v, a)
            return True
    for c, path, d in _two_opts(st, v, span):
        if sign * _gain(area2, d) < 0 and st.can_two_opt(v, c):
            st.two_opt(v, c, path)
            return True
    return False


def hill_climb(poly: Polygonization, inst: Instance, objective: Objective | str,
               budget: SearchBudget) -> Polygonization:
    """First-improvement descent until no move helps or the budget runs out.

    Each pass visits the vertices in a seeded random order; a vertex that
    yields an improvement is revisited at once. The move cap counts
    vertex visits, so a capped run is reproducible.
    """
    objective = Objective(objective)
    st = _start_state(poly, inst)
    sign = 1 if objective is Objective.MIN else -1
    n = st.n
    exhaustive = n <= EXHAUSTIVE_MAX
    span = None if exhaustive else TWO_OPT_SPAN
    rng = random.Random(budget.seed)
    clock = _Clock(budget)
    verts = list(range(n))
    running = True
    while running:
        rng.shuffle(verts)
        improved = False
        for v in verts:
            while True:
                if not clock.tick():
                    running = False
                    break
                if not _improve_at(st, v, sign, exhaustive, span):
                    break
                improved = True
            if not running:
                break
        if not improved:
            break
    return _finish(st, inst, poly.order[0])


def _random_move(st: PolygonState, rng: random.Random, exhaustive: bool, span):
    """A random candidate ``(kind, i, j, path, signed delta)`` or None."""
    n = st.n
    v = rng.randrange(n)
    if rng.random() < 0.5:
        if exhaustive:
            a = rng.randrange(n)
        else:
            starts = _edge_starts(st, v, False)
            if not starts:
                return None
            a = starts[rng.randrange(len(starts))]
        if a == v or a == st.prv[v]:
            return None
        return MoveKind.RELOCATE, v, a, None, st.relocate_delta(v, a)
    limit = n - 3 if span is None else min(span, n - 3)
    if limit < 1:
        return None
    k = rng.randrange(1, limit + 1)
    for c, path, d in _two_opts(st, v, k):
        if k == 1:
            return MoveKind.TWO_OPT, v, c, path, d
        k -= 1
    return None


def simulated_annealing(poly: Polygonization, inst: Instance, objective: Objective | str,
                        budget: SearchBudget,
                        schedule: AnnealSchedule | None = None) -> Polygonization:
    """Annealing over random relocate and 2-opt proposals.

    Improving and neutral moves are always taken; a worsening move by
    ``|g|`` is taken with probability ``exp(-|g| / T)``. After each batch
    ``T`` shrinks by ``alpha``. When the best area has not improved for
    ``stagnation`` batches the search jumps back to the best polygon.
    Returns the best polygon seen, so the result is never worse than the
    input.
    """
    objective = Objective(objective)
    schedule = schedule or AnnealSchedule()
    st = _start_state(poly, inst)
    sign = 1 if objective is Objective.MIN else -1
    n = st.n
    pts = inst.points
    start = poly.order[0]
    exhaustive = n <= EXHAUSTIVE_MAX
    span = None if exhaustive else TWO_OPT_SPAN
    rng = random.Random(budget.seed)
    clock = _Clock(budget)
    temp = schedule.t0 if schedule.t0 is not None else max(abs(st.area2) / n, 1e-9)
    batch = schedule.batch or n

    best_val = abs(st.area2)
    best_order = None  # None while the current polygon is the best one
    stale = 0
    k = 0
    while clock.tick():
        k += 1
        cand = _random_move(st, rng, exhaustive, span)
        if cand is not None:
            kind, i, j, path, d = cand
            g = sign * _gain(st.area2, d)
            if g <= 0 or rng.random() < math.exp(-g / temp):
                ok = st.can_relocate(i, j) if kind is MoveKind.RELOCATE else st.can_two_opt(i, j)
                if ok:
                    if g > 0 and best_order is None:
                        best_order = st.order(start)
                    if kind is MoveKind.RELOCATE:
                        st.relocate(i, j)
                    else:
                        st.two_opt(i, j, path)
                    cur = abs(st.area2)
                    if sign * cur < sign * best_val:
                        best_val = cur
                        best_order = None
                        stale = 0
        if k % batch == 0:
            temp *= schedule.alpha
            stale += 1
            if stale >= schedule.stagnation:
                stale = 0
                if best_order is not None:
                    st = PolygonState.from_order(pts, _ccw(pts, best_order))
                    best_order = None
    if best_order is not None:
        return Polygonization(inst.id, tuple(best_order))
    return _finish(st, inst, start)


def _ccw(pts, order):
    order = list(order)
    if order_area2(pts, order) < 0:
        order.reverse()
    return order


def verify_state(st: PolygonState, inst: Instance) -> None:
    """Debug check: the maintained area matches a recompute and the polygon is simple."""
    order = st.order()
    if st.area2 != order_area2(inst.points, order):
        raise GeometryError("incremental area drifted from the recomputed value")
    if not is_simple(Polygonization(inst.id, tuple(order)), inst).simple:
        raise GeometryError("search produced a non-simple polygon")
