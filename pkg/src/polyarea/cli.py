"""Command-line entry point: ``python -m polyarea <subcommand> ...``.

Exit codes: 0 success, 1 infeasible solution or violation found, 2 usage
error, 3 input/output or parse error. Machine-readable results go to
standard output; progress goes to standard error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import construct, exact, instance_io, lattice, optimize, scoring
from .polygon import (Instance, InstanceError, InvalidPermutationError, Objective,
                      Polygonization, check_permutation, is_simple, order_area2)

log = logging.getLogger("polyarea")

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

CONSTRUCTORS = ("star", "approx-max", "greedy", "random", "exact")
IMPROVERS = ("hc", "sa")
DEFAULT_CHAIN = {Objective.MIN: "greedy+hc", Objective.MAX: "approx-max+hc"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a ``solve`` result."""
    objective: Objective
    algos: tuple[str, ...]
    budget_ms: int | None = 60_000
    moves: int | None = None
    seed: int = 0
    restarts: int = 1
    threads: int = 1
    schedule: optimize.AnnealSchedule = field(default_factory=optimize.AnnealSchedule)
    exact_cap: int = exact.DEFAULT_CAP

    def __post_init__(self):
        if self.budget_ms is None and self.moves is None:
            raise UsageError("the budget must be finite: give --budget-ms or --moves")
        if not self.algos:
            raise UsageError("empty algorithm chain")
        for a in self.algos:
            if a not in CONSTRUCTORS + IMPROVERS:
                raise UsageError(f"unknown algorithm {a!r}")
        if self.algos[0] not in CONSTRUCTORS:
            raise UsageError("an algorithm chain must start with a constructor")
        if self.restarts < 1:
            raise UsageError("restarts must be at least 1")


def parse_chain(text: str) -> tuple[str, ...]:
    return tuple(t.strip() for t in text.split("+") if t.strip())


def _construct(algo: str, inst: Instance, cfg: RunConfig, seed: int) -> Polygonization:
    if algo == "star":
        return construct.best_star(inst)[0]
    if algo == "approx-max":
        return construct.max_area_approx(inst, seed=seed)
    if algo == "greedy":
        return construct.greedy_insertion(inst, cfg.objective)
    if algo == "random":
        return construct.random_polygonization(inst, seed)
    return exact.exact_optimum(inst, cfg.objective, cap=cfg.exact_cap).witness


def run_chain(inst: Instance, cfg: RunConfig, restart: int = 0) -> Polygonization:
    """One pass through the chain. Restart ``r`` searches with seed ``seed + r``;
    for ``r > 0`` a deterministic first constructor is swapped for a seeded
    random polygonization so that restarts explore different basins."""
    seed = cfg.seed + restart
    deadline = None if cfg.budget_ms is None else time.monotonic() + cfg.budget_ms / 1000
    poly = None
    for k, algo in enumerate(cfg.algos):
        if algo in CONSTRUCTORS:
            if k == 0 and restart > 0 and algo not in ("random", "exact"):
                algo = "random"
            poly = _construct(algo, inst, cfg, seed)
        else:
            millis = None
            if deadline is not None:
                millis = max(0, int((deadline - time.monotonic()) * 1000))
            budget = optimize.SearchBudget(max_millis=millis, max_moves=cfg.moves, seed=seed)
            if algo == "hc":
                poly = optimize.hill_climb(poly, inst, cfg.objective, budget)
            else:
                poly = optimize.simulated_annealing(poly, inst, cfg.objective, budget, cfg.schedule)
        log.info("restart %d: %s -> twice-area %d", restart, algo,
                 abs(order_area2(inst.points, poly.order)))
    return poly


def _restart_job(args):
    inst, cfg, r = args
    return run_chain(inst, cfg, r)


def solve(inst: Instance, cfg: RunConfig) -> Polygonization:
    """Best result over all restarts; ties go to the lowest restart index."""
    jobs = [(inst, cfg, r) for r in range(cfg.restarts)]
    if cfg.threads > 1 and cfg.restarts > 1:
        with ProcessPoolExecutor(min(cfg.threads, cfg.restarts)) as ex:
            results = list(ex.map(_restart_job, jobs))
    else:
        results = [_restart_job(j) for j in jobs]
    sign = 1 if cfg.objective is Objective.MIN else -1
    best = None
    for poly in results:
        val = sign * abs(order_area2(inst.points, poly.order))
        if best is None or val < best[0]:
            best = (val, poly)
    return best[1]


# -- subcommands ----------------------------------------------------------------

def _objective(args) -> Objective:
    if args.max:
        return Objective.MAX
    if args.min:
        return Objective.MIN
    raise UsageError("choose --min or --max")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("POLYAREA_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"POLYAREA_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def cmd_gen(args) -> int:
    out = Path(args.output)
    iid = out.stem
    if args.type == "uniform":
        extent = args.extent if args.extent is not None else 10 * args.n
        inst = instance_io.gen_uniform(args.n, extent, args.seed, args.even, iid)
    elif args.type == "ortho":
        inst = instance_io.gen_ortho(args.n, args.gridlines, args.seed, args.extent, args.even, iid)
    else:
        if args.raster is None:
            raise UsageError(f"--raster is required for {args.type}")
        raster = instance_io.read_pgm(args.raster)
        gen = instance_io.gen_illumination if args.type == "illumination" else instance_io.gen_edge
        inst = gen(raster, args.n, args.seed, args.even, iid)
    out.parent.mkdir(parents=True, exist_ok=True)
    instance_io.write_instance(inst, out)
    print(out)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = instance_io.read_instance(args.instance)
    objective = _objective(args)
    algos = parse_chain(args.algo) if args.algo else parse_chain(DEFAULT_CHAIN[objective])
    schedule = optimize.AnnealSchedule(t0=args.t0, alpha=args.alpha, batch=args.batch,
                                       stagnation=args.stagnation)
    cfg = RunConfig(objective, algos, args.budget_ms, args.moves, args.seed,
                    args.restarts, _threads(args), schedule, args.exact_cap)
    t = time.monotonic()
    poly = solve(inst, cfg)
    millis = int((time.monotonic() - t) * 1000)
    rep = scoring.score(poly, inst, objective, millis=millis)
    data = instance_io.serialize_solution(poly)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    row = rep.csv_row()
    line = ",".join(row[k] for k in scoring.CSV_FIELDS)
    print(line, file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK if rep.feasible else EXIT_INFEASIBLE


def cmd_verify(args) -> int:
    inst = instance_io.read_instance(args.instance)
    poly = instance_io.read_solution(args.solution)
    try:
        check_permutation(poly, inst)
    except InvalidPermutationError as e:
        print(f"infeasible: {e}")
        return EXIT_INFEASIBLE
    res = is_simple(poly, inst)
    if res.simple:
        print(f"feasible area2={abs(order_area2(inst.points, poly.order))}")
        return EXIT_OK
    (u, v), (w, x) = res.witness
    print(f"infeasible: edges ({u},{v}) and ({w},{x}) conflict")
    return EXIT_INFEASIBLE


def _instance_paths(spec: str) -> dict[str, Path]:
    p = Path(spec)
    files = sorted(p.iterdir()) if p.is_dir() else [p]
    return {f.stem: f for f in files if f.is_file()}


def cmd_score(args) -> int:
    objective = _objective(args)
    inst_paths = _instance_paths(args.instances)
    subs: dict[str, list] = {k: [] for k in inst_paths}
    sol_files = []
    for s in args.solutions:
        p = Path(s)
        sol_files.extend(sorted(f for f in p.iterdir() if f.is_file()) if p.is_dir() else [p])
    instances: dict[str, Instance] = {}
    for f in sol_files:
        poly = instance_io.read_solution(f)
        if poly.instance_id not in inst_paths:
            raise UsageError(f"{f}: no instance file for id {poly.instance_id!r}")
        subs[poly.instance_id].append((poly, f.stat().st_mtime_ns, f))
    reports = []
    for iid in sorted(subs):
        inst = instances.setdefault(iid, instance_io.read_instance(inst_paths[iid]))
        hull2 = lattice.hull_area2(inst)
        scored = []
        for poly, ts, f in subs[iid]:
            try:
                scored.append(scoring.score(poly, inst, objective, timestamp=ts, hull2=hull2))
            except InvalidPermutationError:
                scored.append(scoring.default_report(inst, objective, hull2, ts))
        reports.append(scoring.best_of(scored, objective, inst))
    sys.stdout.write(scoring.reports_csv(reports))
    return EXIT_OK


def cmd_bounds(args) -> int:
    inst = instance_io.read_instance(args.instance)
    lo, hi = lattice.area_bounds2(inst)
    gap = lattice.hull_gap(inst)
    print(f"lower2 {lo}")
    print(f"upper2 {hi}")
    print(f"h_b {gap.h_b} h_i {gap.h_i} hull_area2 {lattice.hull_area2(inst)}")
    return EXIT_OK


def cmd_count(args) -> int:
    inst = instance_io.read_instance(args.instance)
    print(exact.count_polygonizations(inst, cap=args.cap))
    return EXIT_OK


def cmd_svg(args) -> int:
    inst = instance_io.read_instance(args.instance)
    poly = instance_io.read_solution(args.solution) if args.solution else None
    if poly is not None:
        check_permutation(poly, inst)
    instance_io.export_svg(inst, poly, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyarea", description="Area-optimal polygonization toolkit.")
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on standard error")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("type", choices=("uniform", "ortho", "illumination", "edge"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--extent", type=int)
    g.add_argument("--gridlines", type=int, default=10)
    g.add_argument("--raster", help="PGM image for illumination/edge")
    g.add_argument("--even", action="store_true", help="double all coordinates")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen)

    def objective_flags(p):
        m = p.add_mutually_exclusive_group()
        m.add_argument("--min", action="store_true")
        m.add_argument("--max", action="store_true")

    s = sub.add_parser("solve", help="compute a polygonization")
    s.add_argument("instance")
    objective_flags(s)
    s.add_argument("--algo", help="chain such as greedy+hc (default depends on objective)")
    s.add_argument("--budget-ms", type=int, default=60_000)
    s.add_argument("--moves", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=1)
    s.add_argument("--threads", type=int)
    s.add_argument("--t0", type=float)
    s.add_argument("--alpha", type=float, default=0.999)
    s.add_argument("--batch", type=int)
    s.add_argument("--stagnation", type=int, default=20)
    s.add_argument("--exact-cap", type=int, default=exact.DEFAULT_CAP)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution")
    v.add_argument("instance")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("score", help="score solutions into CSV")
    c.add_argument("instances", help="instance file or directory")
    c.add_argument("solutions", nargs="+", help="solution files or directories")
    objective_flags(c)
    c.set_defaults(func=cmd_score)

    b = sub.add_parser("bounds", help="lattice bounds on twice the area")
    b.add_argument("instance")
    b.set_defaults(func=cmd_bounds)

    n = sub.add_parser("count", help="number of simple polygonizations")
    n.add_argument("instance")
    n.add_argument("--cap", type=int, default=exact.DEFAULT_CAP)
    n.set_defaults(func=cmd_count)

    w = sub.add_parser("svg", help="render to SVG")
    w.add_argument("instance")
    w.add_argument("solution", nargs="?")
    w.add_argument("-o", "--output", required=True)
    w.set_defaults(func=cmd_svg)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (OSError, InstanceError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
