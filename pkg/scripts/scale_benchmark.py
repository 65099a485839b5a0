"""Time the simplicity check and the default MIN chain across instance sizes.

    python3 scripts/scale_benchmark.py --verify 10000 100000 1000000 --solve 10000 100000
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from polyarea.cli import RunConfig, solve
from polyarea.construct import star_polygonization
from polyarea.geom import convex_hull
from polyarea.instance_io import gen_uniform
from polyarea.polygon import Objective, is_simple
from polyarea.scoring import format_score, score


@dataclass
class BenchConfig:
    verify_sizes: tuple[int, ...] = (10_000, 100_000, 1_000_000)
    solve_sizes: tuple[int, ...] = (10_000, 100_000)
    budget_ms: int = 600_000
    seed: int = 1


def bench_verify(n: int, seed: int) -> tuple[float, bool]:
    inst = gen_uniform(n, 10 * n, seed)
    poly = star_polygonization(inst, convex_hull(inst.points)[0])
    t = time.monotonic()
    ok = is_simple(poly, inst).simple
    return time.monotonic() - t, ok


def bench_solve(n: int, seed: int, budget_ms: int):
    inst = gen_uniform(n, 10 * n, seed)
    cfg = RunConfig(Objective.MIN, ("greedy", "hc"), budget_ms=budget_ms, threads=1)
    t = time.monotonic()
    poly = solve(inst, cfg)
    took = time.monotonic() - t
    return took, score(poly, inst, Objective.MIN)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--verify", type=int, nargs="*", default=list(BenchConfig.verify_sizes))
    ap.add_argument("--solve", type=int, nargs="*", default=list(BenchConfig.solve_sizes))
    ap.add_argument("--budget-ms", type=int, default=BenchConfig.budget_ms)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    args = ap.parse_args()
    cfg = BenchConfig(tuple(args.verify), tuple(args.solve), args.budget_ms, args.seed)

    print("task,n,seconds,result")
    for n in cfg.verify_sizes:
        took, ok = bench_verify(n, cfg.seed)
        print(f"verify,{n},{took:.2f},{'simple' if ok else 'NOT SIMPLE'}", flush=True)
    for n in cfg.solve_sizes:
        took, rep = bench_solve(n, cfg.seed, cfg.budget_ms)
        print(f"min-chain,{n},{took:.1f},{format_score(rep.score)}", flush=True)


if __name__ == "__main__":
    main()
