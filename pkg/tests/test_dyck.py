"""Tests for (ell, m)-Dyck paths and their statistics"""

from math import comb

import pytest

from parkext.combinatorics.dyck import DyckPath, dyck_path_steps, enum_dyck_paths, path_stats
from parkext.combinatorics.partitions import mult_partition
from parkext.exceptions import InvalidInputError


def _catalan(n):
    return comb(2 * n, n) // (n + 1)


def _lattice_walk_count(n):
    """paths of n north and n east steps staying weakly above y = x"""

    def walk(north, east):
        if north == east == n:
            return 1
        total = 0
        if north < n:
            total += walk(north + 1, east)
        if east < north:
            total += walk(north, east + 1)
        return total

    return walk(0, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_dyck_paths_are_catalan(n):
    assert len(enum_dyck_paths(n)) == _catalan(n) == _lattice_walk_count(n)


@pytest.mark.parametrize(
    "n,ell,m",
    [(1, 3, 2), (2, 2, 1), (3, 2, 2), (3, 1, 2), (3, 3, 2), (4, 2, 2)],
)
def test_fuss_catalan_counts(n, ell, m):
    expected = ell * comb(ell + (m + 1) * n, n) // (ell + (m + 1) * n)
    assert len(enum_dyck_paths(n, ell, m)) == expected


def test_paths_of_size_three():
    paths = enum_dyck_paths(3)
    assert [p.mu for p in paths] == [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)]


@pytest.mark.parametrize(
    "mu,ell,m,lam,area",
    [
        ((5, 1, 1, 1, 0, 0), 1, 1, (3, 2, 1), 8),
        ((5, 1, 1), 2, 2, (2, 1), 7),
        ((0, 0, 0, 0), 1, 1, (4,), 0),
    ],
)
def test_path_stats(mu, ell, m, lam, area):
    path = DyckPath(n=len(mu), ell=ell, m=m, mu=mu)
    assert path_stats(path) == (lam, area)


@pytest.mark.parametrize("ell,m", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)])
def test_runs_agree_with_mult(ell, m):
    """lambda(D) read off the vertical runs equals mult(mu(D))"""
    for n in range(1, 6 if (ell, m) == (1, 1) else 5):
        for path in enum_dyck_paths(n, ell, m):
            assert path.lam == mult_partition(path.mu)


def test_path_validation():
    with pytest.raises(InvalidInputError):
        DyckPath(n=3, ell=1, m=1, mu=(3, 0, 0))
    with pytest.raises(InvalidInputError):
        DyckPath(n=3, ell=1, m=1, mu=(1, 0))
    with pytest.raises(InvalidInputError):
        enum_dyck_paths(0)


def test_dyck_path_steps():
    assert dyck_path_steps(DyckPath(n=3, ell=1, m=1, mu=(0, 0, 0))) == "NNNEEE"
    assert dyck_path_steps(DyckPath(n=3, ell=1, m=1, mu=(2, 1, 0))) == "NENENE"
    word = dyck_path_steps(DyckPath(n=3, ell=2, m=2, mu=(5, 1, 1)))
    assert word.count("N") == 3
    assert word.count("E") == 2 - 1 + 2 * 3
