"""Minimum- and maximum-area simple polygonizations of integer point sets."""
from .construct import (best_star, greedy_insertion, max_area_approx, random_polygonization,
                        star_polygonization)
from .exact import count_polygonizations, enumerate_polygonizations, exact_optimum
from .geom import AllCollinearError, GeometryError, convex_hull, cross, orient
from .lattice import area_bounds2, hull_area2, hull_gap, lattice_stats
from .optimize import AnnealSchedule, SearchBudget, hill_climb, simulated_annealing
from .polygon import (Instance, Objective, Polygonization, is_simple, is_simple_reference,
                      polygon_area2)
from .scoring import ScoreReport, aggregate, best_of, score

__all__ = [
    "AllCollinearError", "AnnealSchedule", "GeometryError", "Instance", "Objective",
    "Polygonization", "ScoreReport", "SearchBudget", "aggregate", "area_bounds2", "best_of",
    "best_star", "convex_hull", "count_polygonizations", "cross", "enumerate_polygonizations",
    "exact_optimum", "greedy_insertion", "hill_climb", "hull_area2", "hull_gap",
    "is_simple", "is_simple_reference", "lattice_stats", "max_area_approx", "orient",
    "polygon_area2", "random_polygonization", "score", "simulated_annealing",
    "star_polygonization",
]
