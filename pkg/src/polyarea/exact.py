"""Brute-force enumeration of polygonizations for small point sets."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .geom import convex_hull, edges_conflict, GeometryError
from .polygon import Instance, Objective, Polygonization, order_area2

DEFAULT_CAP = 10


class InstanceTooLargeError(GeometryError):
    pass


@dataclass(frozen=True)
class ExactResult:
    optimum2: int
    witness: Polygonization
    count_simple: int


def _check(inst: Instance, cap: int) -> None:
    if inst.n > cap:
        raise InstanceTooLargeError(f"n = {inst.n} exceeds the enumeration cap {cap}")
    convex_hull(inst.points)  # raises AllCollinearError


def _dfs(pts, n: int, second: int) -> Iterator[tuple[int, ...]]:
    """Canonical simple orders starting ``0, second``, in lexicographic order."""
    path = [0, second]
    used = [False] * n
    used[0] = used[second] = True
    edges = [(pts[0], pts[second])]

    def rec():
        last = pts[path[-1]]
        if len(path) == n:
            # canonical orientation: second vertex below the last one
            if path[1] > path[-1]:
                return
            p0 = pts[0]
            for e in edges:
                if edges_conflict(last, p0, e[0], e[1]):
                    return
            yield tuple(path)
            return
        for v in range(1, n):
            if used[v]:
                continue
            pv = pts[v]
            ok = True
            for e in edges:
                if edges_conflict(last, pv, e[0], e[1]):
                    ok = False
                    break
            if not ok:
                continue
            used[v] = True
            path.append(v)
            edges.append((last, pv))
            yield from rec()
            edges.pop()
            path.pop()
            used[v] = False

    yield from rec()


def enumerate_polygonizations(inst: Instance, cap: int = DEFAULT_CAP) -> Iterator[Polygonization]:
    """Every simple polygonization exactly once, up to rotation and reflection.

    Representatives start at point 0 and have ``order[1] < order[-1]``;
    they come out in lexicographic order.
    """
    _check(inst, cap)
    n = inst.n
    pts = inst.points
    for second in range(1, n):
        for order in _dfs(pts, n, second):
            yield Polygonization(inst.id, order)


def _subtree(args):
    pts, n, second, sign = args
    best = None
    count = 0
    for order in _dfs(pts, n, second):
        count += 1
        a2 = abs(order_area2(pts, order))
        if best is None or sign * a2 < sign * best[0]:
            best = (a2, order)
    return count, best


def exact_optimum(inst: Instance, objective: Objective | str, cap: int = DEFAULT_CAP,
                  workers: int = 1) -> ExactResult:
    """Global optimum by enumeration; the witness is the lexicographically
    smallest canonical order attaining it."""
    objective = Objective(objective)
    _check(inst, cap)
    n = inst.n
    pts = inst.points
    sign = 1 if objective is Objective.MIN else -1
    jobs = [(pts, n, s, sign) for s in range(1, n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_subtree, jobs))
    else:
        results = [_subtree(j) for j in jobs]
    total = 0
    best = None
    # subtrees come in lexicographic order, so strict improvement keeps the smallest witness
    for count, sub in results:
        total += count
        if sub is not None and (best is None or sign * sub[0] < sign * best[0]):
            best = sub
    if best is None:
        raise GeometryError("no simple polygonization found")
    return ExactResult(best[0], Polygonization(inst.id, best[1]), total)


def count_polygonizations(inst: Instance, cap: int = DEFAULT_CAP) -> int:
    return sum(1 for _ in enumerate_polygonizations(inst, cap))
