"""Tests for parking functions and the labeled Dyck path bijection"""

from itertools import permutations, product
import random

import pytest

from parkext.combinatorics.dyck import DyckPath
from parkext.combinatorics.parking import (
    ParkingFunction,
    apply_permutation_to_labeling,
    apply_permutation_to_parking,
    count_fixed_parking_functions,
    enum_parking_functions,
    is_parking_function,
    labeled_path_to_parking,
    park_cars,
    parking_to_labeled_path,
)
from parkext.exceptions import InvalidInputError


@pytest.mark.parametrize(
    "prefs,expected",
    [
        ((2, 6, 1, 2, 1, 2), True),
        ((2, 2), False),
        ((1, 1), True),
        ((), True),
        ((0, 1), False),
    ],
)
def test_is_parking_function(prefs, expected):
    assert is_parking_function(prefs) is expected


@pytest.mark.parametrize("n", range(1, 7))
def test_parking_function_count(n):
    functions = enum_parking_functions(n)
    assert len(functions) == (n + 1) ** (n - 1)
    assert len(set(functions)) == len(functions)


@pytest.mark.parametrize("n", range(1, 6))
def test_parking_process_agrees_with_sorting_criterion(n):
    for prefs in product(range(1, n + 1), repeat=n):
        assert is_parking_function(prefs) == (park_cars(prefs) is not None)


def test_park_cars():
    assert park_cars((1, 1, 2)) == (1, 2, 3)
    assert park_cars((3, 3, 1)) is None


def test_figure_path_to_parking():
    """the size-6 example path with its labels"""
    path = DyckPath(n=6, ell=1, m=1, mu=(5, 1, 1, 1, 0, 0))
    labeling = (frozenset({3, 5}), frozenset({1, 4, 6}), frozenset({2}))
    pf = labeled_path_to_parking(path, labeling)
    assert pf.prefs == (2, 6, 1, 2, 1, 2)
    assert parking_to_labeled_path(pf) == (path, labeling)


def test_single_run_path():
    path = DyckPath(n=4, ell=1, m=1, mu=(0, 0, 0, 0))
    pf = labeled_path_to_parking(path, [{1, 2, 3, 4}])
    assert pf.prefs == (1, 1, 1, 1)


def test_malformed_labeling():
    path = DyckPath(n=3, ell=1, m=1, mu=(1, 0, 0))
    with pytest.raises(InvalidInputError):
        labeled_path_to_parking(path, [{1}, {2, 3}])
    with pytest.raises(InvalidInputError):
        labeled_path_to_parking(path, [{1, 1}, {3}])
    with pytest.raises(InvalidInputError):
        labeled_path_to_parking(DyckPath(n=2, ell=2, m=1, mu=(0, 0)), [{1, 2}])


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_round_trip(n):
    functions = enum_parking_functions(n)
    images = {parking_to_labeled_path(pf) for pf in functions}
    assert len(images) == len(functions)
    for pf in functions:
        assert labeled_path_to_parking(*parking_to_labeled_path(pf)) == pf


def test_bijection_is_equivariant():
    rng = random.Random(11)
    functions = enum_parking_functions(5)
    for _ in range(50):
        pf = rng.choice(functions)
        w = tuple(rng.sample(range(1, 6), 5))
        path, labeling = parking_to_labeled_path(pf)
        moved = labeled_path_to_parking(path, apply_permutation_to_labeling(w, labeling))
        assert moved == apply_permutation_to_parking(w, pf)


def test_permutation_action():
    pf = ParkingFunction((1, 2, 1))
    assert apply_permutation_to_parking((2, 3, 1), pf).prefs == (2, 1, 1)
    with pytest.raises(InvalidInputError):
        apply_permutation_to_parking((1, 1, 2), pf)


@pytest.mark.parametrize("cycles", [(1, 1, 1), (2, 1), (3,), (2, 2), (4,)])
def test_fixed_parking_functions(cycles):
    """compare with a brute-force count over one permutation of that cycle type"""
    n = sum(cycles)
    w, start = [], 1
    for length in cycles:
        block = list(range(start, start + length))
        w.extend(block[1:] + block[:1])
        start += length
    fixed = sum(
        apply_permutation_to_parking(tuple(w), pf) == pf for pf in enum_parking_functions(n)
    )
    assert count_fixed_parking_functions(cycles) == fixed


def test_identity_fixes_everything():
    for n in range(1, 5):
        identity = next(iter(permutations(range(1, n + 1))))
        assert count_fixed_parking_functions((1,) * n) == (n + 1) ** (n - 1)
        assert all(
            apply_permutation_to_parking(identity, pf) == pf for pf in enum_parking_functions(n)
        )
