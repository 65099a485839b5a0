"""How often the heuristics reach the exact optimum on small random inputs.

    python3 scripts/oracle_agreement.py --instances 200 --max-n 8
"""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from polyarea.cli import RunConfig, solve
from polyarea.construct import greedy_insertion
from polyarea.exact import exact_optimum
from polyarea.geom import AllCollinearError, convex_hull
from polyarea.optimize import SearchBudget, simulated_annealing
from polyarea.polygon import Instance, Objective, polygon_area2


@dataclass
class AgreementConfig:
    instances: int = 200
    max_n: int = 8
    extent: int = 12
    restarts: int = 8
    sa_moves: int = 20_000
    seed: int = 0


def random_instance(rng: random.Random, cfg: AgreementConfig, k: int) -> Instance:
    while True:
        n = rng.randint(3, cfg.max_n)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(0, cfg.extent), rng.randint(0, cfg.extent)))
        try:
            convex_hull(list(pts))
        except AllCollinearError:
            continue
        return Instance(f"a{k}", tuple(sorted(pts)))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=AgreementConfig.instances)
    ap.add_argument("--max-n", type=int, default=AgreementConfig.max_n)
    ap.add_argument("--seed", type=int, default=AgreementConfig.seed)
    args = ap.parse_args()
    cfg = AgreementConfig(instances=args.instances, max_n=args.max_n, seed=args.seed)
    rng = random.Random(cfg.seed)

    print("objective,method,matched,total")
    for obj in Objective:
        tallies = {"greedy": 0, "greedy+hc x1": 0, f"greedy+hc x{cfg.restarts}": 0, "greedy+sa": 0}
        for k in range(cfg.instances):
            inst = random_instance(rng, cfg, k)
            ex = exact_optimum(inst, obj).optimum2
            g = greedy_insertion(inst, obj)
            tallies["greedy"] += polygon_area2(g, inst) == ex
            for r in (1, cfg.restarts):
                run = RunConfig(obj, ("greedy", "hc"), budget_ms=None, moves=100_000,
                                restarts=r, threads=1)
                tallies[f"greedy+hc x{r}"] += polygon_area2(solve(inst, run), inst) == ex
            sa = simulated_annealing(g, inst, obj, SearchBudget(max_moves=cfg.sa_moves, seed=k))
            tallies["greedy+sa"] += polygon_area2(sa, inst) == ex
        for name, hits in tallies.items():
            print(f"{obj.value},{name},{hits},{cfg.instances}")


if __name__ == "__main__":
    main()
