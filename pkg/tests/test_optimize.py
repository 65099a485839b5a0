import random

import pytest
from hypothesis import given, settings, strategies as st

from polyarea.construct import greedy_insertion, random_polygonization
from polyarea.engine import EdgeGrid, PolygonState
from polyarea.exact import exact_optimum
from polyarea.optimize import (AnnealSchedule, Move, MoveKind, SearchBudget, _random_move,
                               apply_move, hill_climb, propose_moves, simulated_annealing,
                               verify_state)
from polyarea.polygon import (Instance, NonSimplePolygonError, Objective, Polygonization,
                              is_simple, order_area2, polygon_area2)

import oracles
from conftest import BOWTIE, SQUARE_CENTER, instances, random_instance

HEXAGON6 = Instance("h6", ((0, 0), (4, 0), (6, 3), (4, 6), (0, 6), (-2, 3)))


def test_budget_and_schedule_validation():
    with pytest.raises(ValueError):
        SearchBudget()
    with pytest.raises(ValueError):
        AnnealSchedule(t0=0)
    with pytest.raises(ValueError):
        AnnealSchedule(alpha=1.0)
    with pytest.raises(ValueError):
        AnnealSchedule(alpha=0)


def test_non_simple_input_rejected():
    bow = Polygonization("bow", (0, 1, 2, 3))
    with pytest.raises(NonSimplePolygonError):
        hill_climb(bow, BOWTIE, "min", SearchBudget(max_moves=10))
    with pytest.raises(NonSimplePolygonError):
        simulated_annealing(bow, BOWTIE, "min", SearchBudget(max_moves=10))


def test_convex_position_has_no_improving_move():
    hull = Polygonization("h6", tuple(range(6)))
    assert list(propose_moves(hull, HEXAGON6, "min")) == []
    assert list(propose_moves(hull, HEXAGON6, "max")) == []
    assert hill_climb(hull, HEXAGON6, "min", SearchBudget(max_moves=1000)) == hull


def test_square_center_relocation_delta():
    # notching the center into any hull edge takes twice-area from 8 to 6
    hull_state = PolygonState.from_order(SQUARE_CENTER.points, [0, 1, 2, 3])
    assert {hull_state.insert_delta(4, a) for a in range(4)} == {-2}
    # so moving the notch to another edge changes nothing
    poly = Polygonization("sq", (0, 4, 1, 2, 3))
    moves = list(propose_moves(poly, SQUARE_CENTER, "min", improving_only=False))
    reloc = [m for m in moves if m.kind is MoveKind.RELOCATE and m.i == 4]
    assert len(reloc) == 3
    assert {m.delta2 for m in reloc} == {0}


def test_local_optimum_unchanged():
    poly = Polygonization("sq", (0, 1, 4, 2, 3))
    assert hill_climb(poly, SQUARE_CENTER, "min", SearchBudget(max_moves=1000)) == poly


def test_hill_climb_improves_random_start():
    inst = random_instance(random.Random(20), 20, 20, 100)
    start = random_polygonization(inst, 0)
    out = hill_climb(start, inst, "min", SearchBudget(max_moves=10_000))
    assert is_simple(out, inst).simple
    assert polygon_area2(out, inst) <= polygon_area2(start, inst)
    out = hill_climb(start, inst, "max", SearchBudget(max_moves=10_000))
    assert polygon_area2(out, inst) >= polygon_area2(start, inst)


@settings(max_examples=30)
@given(instances(4, 12, 12), st.sampled_from(list(Objective)), st.integers(0, 100))
def test_hill_climb_monotone_and_simple(inst, obj, seed):
    start = random_polygonization(inst, seed)
    out = hill_climb(start, inst, obj, SearchBudget(max_moves=500, seed=seed))
    assert is_simple(out, inst).simple and oracles.shapely_simple(inst.points, out.order)
    assert not obj.better(polygon_area2(start, inst), polygon_area2(out, inst))


def test_proposed_deltas_are_exact():
    inst = random_instance(random.Random(21), 15, 15, 40)
    poly = random_polygonization(inst, 1)
    base = polygon_area2(poly, inst)
    for m in list(propose_moves(poly, inst, "min", improving_only=False))[:300]:
        st_ = PolygonState.from_order(inst.points, list(_ccw(inst, poly.order)))
        apply_move(st_, m)
        order = st_.order()
        assert abs(order_area2(inst.points, order)) - base == m.delta2
        assert oracles.shapely_simple(inst.points, order)


def _ccw(inst, order):
    return order if order_area2(inst.points, order) > 0 else order[::-1]


@pytest.mark.parametrize("n", [30, 400])
def test_incremental_area_after_1000_moves(n):
    inst = random_instance(random.Random(n), n, n, 10 * n)
    poly = random_polygonization(inst, 2)
    st_ = PolygonState.from_order(inst.points, list(_ccw(inst, poly.order)))
    rng = random.Random(3)
    exhaustive = n <= 200
    applied = 0
    total = 0
    start2 = st_.area2
    while applied < 1000:
        cand = _random_move(st_, rng, exhaustive, None if exhaustive else 40)
        if cand is None:
            continue
        kind, i, j, path, d = cand
        if kind is MoveKind.RELOCATE:
            if not st_.can_relocate(i, j):
                continue
            st_.relocate(i, j)
        else:
            if not st_.can_two_opt(i, j):
                continue
            st_.two_opt(i, j, path)
        total += d
        applied += 1
        if applied % 250 == 0:
            verify_state(st_, inst)
    assert st_.area2 == order_area2(inst.points, st_.order())
    assert st_.area2 - start2 == total


def test_annealing_never_worse_and_deterministic():
    inst = random_instance(random.Random(22), 40, 40, 200)
    start = greedy_insertion(inst, "min")
    b = SearchBudget(max_moves=20_000, seed=4)
    a1 = simulated_annealing(start, inst, "min", b)
    a2 = simulated_annealing(start, inst, "min", b)
    assert a1 == a2
    assert is_simple(a1, inst).simple
    assert polygon_area2(a1, inst) <= polygon_area2(start, inst)
    m = simulated_annealing(greedy_insertion(inst, "max"), inst, "max", b)
    assert polygon_area2(m, inst) >= polygon_area2(greedy_insertion(inst, "max"), inst)


def test_cold_annealing_is_monotone():
    inst = random_instance(random.Random(23), 25, 25, 100)
    start = random_polygonization(inst, 0)
    out = simulated_annealing(start, inst, "min", SearchBudget(max_moves=5000, seed=1),
                              AnnealSchedule(t0=1e-12))
    assert polygon_area2(out, inst) <= polygon_area2(start, inst)


def test_annealing_finds_small_optima():
    rng = random.Random(24)
    hits = 0
    trials = 60
    for k in range(trials):
        inst = random_instance(rng, 4, 8, 10, id=f"a{k}")
        ex = exact_optimum(inst, "min").optimum2
        out = simulated_annealing(greedy_insertion(inst, "min"), inst, "min",
                                  SearchBudget(max_moves=20_000, seed=k))
        got = polygon_area2(out, inst)
        assert got >= ex
        hits += got == ex
    assert hits >= 0.95 * trials


def test_move_record():
    m = Move(MoveKind.TWO_OPT, 1, 3, -4)
    assert m.kind == "two_opt" and m.delta2 == -4


coord = st.integers(-300, 300)


@given(st.tuples(coord, coord), st.tuples(coord, coord), st.integers(1, 40))
def test_grid_walk_covers_segment_cells_from_first_endpoint(p, q, side):
    grid = EdgeGrid([(-300, -300), (300, 300)], side)
    walked = list(grid.walk(p, q))
    assert sorted(walked) == sorted(grid.segment_cells(p, q))
    assert len(set(walked)) == len(walked)
    c, r = walked[0]
    cs = grid.cs
    assert c * cs <= p[0] - grid.ox <= (c + 1) * cs
    assert r * cs <= p[1] - grid.oy <= (r + 1) * cs
