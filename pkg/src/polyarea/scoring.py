"""Contest scoring: area over hull area, defaults for infeasible uploads,
best-of selection and totals. All comparisons use exact rationals."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .geom import GeometryError
from .lattice import hull_area2
from .polygon import (Instance, InstanceMismatchError, Objective, Polygonization,
                      is_simple, order_area2)

CSV_FIELDS = ("instance_id", "objective", "feasible", "score", "area2", "hull_area2", "millis")


class DuplicateReportError(GeometryError):
    pass


@dataclass(frozen=True)
class ScoreReport:
    instance_id: str
    objective: Objective
    feasible: bool
    area2: int | None
    hull_area2: int
    defaulted: bool = False
    timestamp: float | None = None
    millis: int | None = None

    @property
    def score(self) -> Fraction:
        if not self.feasible:
            return Fraction(1) if self.objective is Objective.MIN else Fraction(0)
        return Fraction(self.area2, self.hull_area2)

    def csv_row(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "objective": self.objective.value,
            "feasible": "true" if self.feasible else "false",
            "score": format_score(self.score),
            "area2": "" if self.area2 is None else str(self.area2),
            "hull_area2": str(self.hull_area2),
            "millis": "" if self.millis is None else str(self.millis),
        }


def format_score(x: Fraction, places: int = 6) -> str:
    """Decimal rendering with round-half-even, computed without floats."""
    scale = 10 ** places
    q, r = divmod(x.numerator * scale, x.denominator)
    twice = 2 * r
    if twice > x.denominator or (twice == x.denominator and q % 2 == 1):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}.{frac:0{places}d}" if places else f"{sign}{whole}"


def default_report(inst: Instance, objective: Objective | str, hull2: int | None = None,
                   timestamp: float | None = None) -> ScoreReport:
    objective = Objective(objective)
    if hull2 is None:
        hull2 = hull_area2(inst)
    return ScoreReport(inst.id, objective, False, None, hull2, defaulted=True, timestamp=timestamp)


def score(poly: Polygonization, inst: Instance, objective: Objective | str,
          timestamp: float | None = None, millis: int | None = None,
          hull2: int | None = None) -> ScoreReport:
    """Score one submission; infeasible ones get the contest default."""
    objective = Objective(objective)
    if poly.instance_id != inst.id:
        raise InstanceMismatchError(f"solution for {poly.instance_id!r} scored against {inst.id!r}")
    if hull2 is None:
        hull2 = hull_area2(inst)
    n = inst.n
    order = poly.order
    if len(order) != n or sorted(order) != list(range(n)) or not is_simple(poly, inst).simple:
        r = default_report(inst, objective, hull2, timestamp)
        return ScoreReport(r.instance_id, r.objective, False, None, hull2, True, timestamp, millis)
    a2 = abs(order_area2(inst.points, order))
    return ScoreReport(inst.id, objective, True, a2, hull2, False, timestamp, millis)


def aggregate(reports: Iterable[ScoreReport]) -> dict[Objective, Fraction]:
    """Exact score totals per objective; lower is better for MIN, higher for MAX."""
    totals = {Objective.MIN: Fraction(0), Objective.MAX: Fraction(0)}
    seen = set()
    for r in reports:
        key = (r.instance_id, r.objective)
        if key in seen:
            raise DuplicateReportError(f"two reports for {r.instance_id} ({r.objective.value})")
        seen.add(key)
        totals[r.objective] += r.score
    return totals


def best_of(reports: Iterable[ScoreReport], objective: Objective | str,
            inst: Instance | None = None) -> ScoreReport:
    """The best feasible submission; equal scores go to the earliest timestamp.

    With nothing feasible, the defaulted report is returned (``inst`` is
    needed only when ``reports`` is empty).
    """
    objective = Objective(objective)
    reports = list(reports)
    feasible = [r for r in reports if r.feasible]
    if feasible:
        sign = 1 if objective is Objective.MIN else -1

        def rank(r):
            ts = r.timestamp if r.timestamp is not None else float("inf")
            return (sign * r.score, ts)

        return min(feasible, key=rank)
    if reports:
        first = min(reports, key=lambda r: r.timestamp if r.timestamp is not None else float("inf"))
        return ScoreReport(first.instance_id, objective, False, None, first.hull_area2,
                           True, first.timestamp, first.millis)
    if inst is None:
        raise ValueError("no submissions and no instance to default against")
    return default_report(inst, objective)


def reports_csv(reports: Iterable[ScoreReport], totals: bool = True) -> str:
    reports = list(reports)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.csv_row())
    if totals:
        for obj, total in aggregate(reports).items():
            if any(r.objective is obj for r in reports):
                buf.write(f"# total {obj.value} {format_score(total)}\n")
    return buf.getvalue()
