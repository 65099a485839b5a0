import random

import pytest
from hypothesis import given, strategies as st

from polyarea.geom import COORD_CAP
from polyarea.polygon import (DuplicatePointError, Instance, InstanceError,
                              InstanceMismatchError, InvalidPermutationError, NonSimplePolygonError,
                              Objective, Polygonization, check_permutation, is_simple,
                              is_simple_reference, order_area2, polygon_area2)
from polyarea.sweep import find_violation

import oracles
from conftest import BOWTIE, SQUARE_CENTER, instances


def test_instance_validation():
    with pytest.raises(DuplicatePointError):
        Instance("d", ((0, 0), (1, 0), (0, 0)))
    with pytest.raises(InstanceError):
        Instance("c", ((0, 0), (COORD_CAP + 1, 0), (0, 1)))
    assert SQUARE_CENTER.n == 5


def test_objective_better():
    assert Objective.MIN.better(3, 4)
    assert Objective.MAX.better(4, 3)
    assert not Objective.MIN.better(4, 4)


def test_check_permutation_errors():
    with pytest.raises(InvalidPermutationError):
        check_permutation(Polygonization("sq", (0, 1, 2, 3)), SQUARE_CENTER)
    with pytest.raises(InvalidPermutationError):
        check_permutation(Polygonization("sq", (0, 1, 2, 3, 3)), SQUARE_CENTER)
    with pytest.raises(InstanceMismatchError):
        check_permutation(Polygonization("other", (0, 1, 2, 3, 4)), SQUARE_CENTER)


def test_bowtie_witness():
    res = is_simple(Polygonization("bow", (0, 1, 2, 3)), BOWTIE)
    assert not res.simple
    edges = {frozenset(e) for e in res.witness}
    assert edges == {frozenset((0, 1)), frozenset((2, 3))}
    with pytest.raises(NonSimplePolygonError):
        polygon_area2(Polygonization("bow", (0, 1, 2, 3)), BOWTIE)


def test_square_notch_area():
    poly = Polygonization("sq", (0, 1, 4, 2, 3))
    assert is_simple(poly, SQUARE_CENTER).simple
    assert polygon_area2(poly, SQUARE_CENTER) == 6
    assert polygon_area2(poly.reversed(), SQUARE_CENTER) == 6


def test_triangle_with_collinear_point_on_edge():
    inst = Instance("t", ((0, 0), (1, 0), (2, 0), (0, 2)))
    assert is_simple(Polygonization("t", (0, 1, 2, 3)), inst).simple
    assert not is_simple(Polygonization("t", (0, 2, 1, 3)), inst).simple


@given(instances(3, 9, 4), st.randoms(use_true_random=False))
def test_sweep_reference_and_shapely_agree(inst, rnd):
    order = list(range(inst.n))
    rnd.shuffle(order)
    poly = Polygonization("h", tuple(order))
    a = is_simple(poly, inst).simple
    b = is_simple_reference(poly, inst).simple
    assert a == b == oracles.shapely_simple(inst.points, order)


def test_jit_kernel_matches_python_kernel():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(3, 12)
        pts = list({(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(n)})
        if len(pts) < 3:
            continue
        order = list(range(len(pts)))
        rng.shuffle(order)
        a = find_violation(pts, order, use_jit=False)
        b = find_violation(pts, order, use_jit=True)
        assert (a is None) == (b is None)


def test_big_coordinates_use_exact_path():
    big = COORD_CAP
    inst = Instance("b", ((0, 0), (big, 1), (big - 1, big), (1, big - 2)))
    assert is_simple(Polygonization("b", (0, 1, 2, 3)), inst).simple
    assert not is_simple(Polygonization("b", (0, 2, 1, 3)), inst).simple


def test_order_area2_signed():
    pts = ((0, 0), (2, 0), (0, 2))
    assert order_area2(pts, (0, 1, 2)) == 4
    assert order_area2(pts, (0, 2, 1)) == -4
