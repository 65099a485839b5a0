"""Instances, polygonizations and the simplicity verifiers."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Sequence

from .geom import COORD_CAP, GeometryError, edges_conflict, twice_signed_area
from .sweep import find_violation


class Objective(str, Enum):
    MIN = "min"
    MAX = "max"

    def better(self, a, b) -> bool:
        """Is objective value ``a`` strictly better than ``b``?"""
        return a < b if self is Objective.MIN else a > b


class InstanceError(GeometryError):
    pass


class DuplicatePointError(InstanceError):
    pass


class InvalidPermutationError(GeometryError):
    pass


class InstanceMismatchError(GeometryError):
    pass


class NonSimplePolygonError(GeometryError):
    pass


@dataclass(frozen=True)
class Instance:
    id: str
    points: tuple[tuple[int, int], ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        pts = tuple((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        for x, y in pts:
            if abs(x) > COORD_CAP or abs(y) > COORD_CAP:
                raise InstanceError(f"coordinate ({x}, {y}) exceeds cap 2^40")
        if len(set(pts)) != len(pts):
            seen = set()
            for i, p in enumerate(pts):
                if p in seen:
                    raise DuplicatePointError(f"duplicate point {p} at index {i}")
                seen.add(p)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Polygonization:
    instance_id: str
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(i) for i in self.order))

    def vertices(self, inst: Instance) -> list[tuple[int, int]]:
        pts = inst.points
        return [pts[i] for i in self.order]

    def reversed(self) -> "Polygonization":
        return Polygonization(self.instance_id, self.order[::-1])


class SimplicityResult(NamedTuple):
    simple: bool
    witness: tuple[tuple[int, int], tuple[int, int]] | None

    def __bool__(self) -> bool:
        return self.simple


def check_permutation(poly: Polygonization, inst: Instance) -> None:
    if poly.instance_id != inst.id:
        raise InstanceMismatchError(f"solution for {poly.instance_id!r} applied to {inst.id!r}")
    n = inst.n
    if len(poly.order) != n:
        raise InvalidPermutationError(f"order has {len(poly.order)} entries, instance has {n} points")
    seen = bytearray(n)
    for i in poly.order:
        if not 0 <= i < n or seen[i]:
            raise InvalidPermutationError(f"index {i} out of range or repeated")
        seen[i] = 1


def is_simple(poly: Polygonization, inst: Instance) -> SimplicityResult:
    """Sweep-line simplicity test; O(n log n), stops at the first violation.

    Straight-angle vertices are allowed; adjacent edges folding back onto
    each other are not.
    """
    check_permutation(poly, inst)
    if inst.n < 3:
        return SimplicityResult(False, None)
    w = find_violation(inst.points, poly.order)
    return SimplicityResult(w is None, w)


def is_simple_reference(poly: Polygonization, inst: Instance) -> SimplicityResult:
    """All-pairs O(n^2) check with the same contract as :func:`is_simple`."""
    check_permutation(poly, inst)
    n = inst.n
    if n < 3:
        return SimplicityResult(False, None)
    pts = inst.points
    order = poly.order
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        a, b = edges[i]
        pa, pb = pts[a], pts[b]
        for j in range(i + 1, n):
            c, d = edges[j]
            if edges_conflict(pa, pb, pts[c], pts[d]):
                return SimplicityResult(False, (edges[i], edges[j]))
    return SimplicityResult(True, None)


def polygon_area2(poly: Polygonization, inst: Instance, verify: bool = True) -> int:
    """Twice the enclosed area of a simple polygonization."""
    if verify:
        res = is_simple(poly, inst)
        if not res.simple:
            raise NonSimplePolygonError(f"polygon is not simple: {res.witness}")
    return abs(twice_signed_area(poly.vertices(inst)))


def order_area2(points: Sequence, order: Sequence[int]) -> int:
    """Signed twice-area of ``order`` over ``points`` with no checks."""
    total = 0
    last = points[order[-1]]
    px, py = last
    for i in order:
        x, y = points[i]
        total += px * y - x * py
        px, py = x, y
    return total
