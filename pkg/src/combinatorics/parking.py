"""Parking functions, the parking process, and labeled Dyck paths.

Permutations are given in one-line notation as tuples `(w(1), ..., w(n))`
with 1-based values. S_n acts on preference sequences by
`w.(a_1, ..., a_n) = (a_{w(1)}, ..., a_{w(n)})`; on labelings the matching
action replaces every block B by `{i : w(i) in B}`, and the bijection
`labeled_path_to_parking` intertwines the two.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

from beartype import beartype
import more_itertools

from parkext.combinatorics.dyck import DyckPath, enum_dyck_paths
from parkext.combinatorics.partitions import Partition
from parkext.exceptions import InvalidInputError

__all__ = [
    "ParkingFunction",
    "Labeling",
    "is_parking_function",
    "enum_parking_functions",
    "park_cars",
    "labeled_path_to_parking",
    "parking_to_labeled_path",
    "apply_permutation_to_parking",
    "apply_permutation_to_labeling",
    "count_fixed_parking_functions",
]

Labeling = tuple[frozenset[int], ...]
"""One block of labels per vertical run, runs ordered bottom to top."""


@beartype
def is_parking_function(prefs: Sequence[int]) -> bool:
    """True when the sorted preferences satisfy b_i <= i."""
    if any(a < 1 for a in prefs):
        return False
    return all(b <= i for i, b in enumerate(sorted(prefs), start=1))


@dataclass(frozen=True)
class ParkingFunction:
    """A driver preference sequence (a_1, ..., a_n) that lets every car park."""

    prefs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefs", tuple(int(a) for a in self.prefs))
        if not is_parking_function(self.prefs):
            raise InvalidInputError(
                f"{self.prefs} is not a parking function",
                fix="its sorted rearrangement must satisfy b_i <= i",
            )

    @property
    def n(self) -> int:
        return len(self.prefs)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.prefs) + ")"


@beartype
def park_cars(prefs: Sequence[int]) -> tuple[int, ...] | None:
    """Run the parking process: car i takes the first free spot >= a_i.

    Returns:
        the spot taken by each car, or None when some car drives off the end
        of the lot (exactly when `prefs` is not a parking function).
    """
    n = len(prefs)
    taken = [False] * (n + 1)
    spots = []
    for a in prefs:
        if a < 1:
            return None
        spot = a
        while spot <= n and taken[spot]:
            spot += 1
        if spot > n:
            return None
        taken[spot] = True
        spots.append(spot)
    return tuple(spots)


@beartype
def enum_parking_functions(n: int) -> list[ParkingFunction]:
    """All (n+1)^(n-1) parking functions of size n, in lexicographic order.

    Each nondecreasing parking function (a Dyck path) contributes its
    distinct rearrangements.
    """
    if n < 0:
        raise InvalidInputError(f"size must be nonnegative, got {n}")
    if n == 0:
        return [ParkingFunction(())]
    found = []
    for path in enum_dyck_paths(n, 1, 1):
        nondecreasing = sorted(1 + path.row_x(row) for row in range(1, n + 1))
        found.extend(more_itertools.distinct_permutations(nondecreasing))
    return [ParkingFunction(prefs) for prefs in sorted(found)]


def _check_labeling(path: DyckPath, labeling: Sequence[frozenset[int]]) -> None:
    runs = path.runs()
    if len(labeling) != len(runs):
        raise InvalidInputError(
            f"{len(labeling)} label blocks for {len(runs)} vertical runs of {path}"
        )
    for (x, length), block in zip(runs, labeling):
        if len(block) != length:
            raise InvalidInputError(
                f"run at x={x} has length {length} but is labeled by {sorted(block)}"
            )
    seen = set().union(*labeling) if labeling else set()
    if seen != set(range(1, path.n + 1)) or sum(len(b) for b in labeling) != path.n:
        raise InvalidInputError(
            f"labels {[sorted(b) for b in labeling]} do not use each of 1..{path.n} once"
        )


@beartype
def labeled_path_to_parking(
    path: DyckPath,
    labeling: Sequence[frozenset[int] | set[int]],
) -> ParkingFunction:
    """Send a labeled Dyck path to the parking function a_i = 1 + x(run of i).

    Args:
        path: a path with ell = m = 1
        labeling: one block of labels per vertical run, bottom to top

    Returns:
        the corresponding ParkingFunction
    """
    if path.ell != 1 or path.m != 1:
        raise InvalidInputError("labeled paths are only defined for ell = m = 1")
    blocks = tuple(frozenset(block) for block in labeling)
    _check_labeling(path, blocks)
    prefs = [0] * path.n
    for (x, _), block in zip(path.runs(), blocks):
        for label in block:
            prefs[label - 1] = x + 1
    return ParkingFunction(tuple(prefs))


@beartype
def parking_to_labeled_path(pf: ParkingFunction) -> tuple[DyckPath, Labeling]:
    """inverse of `labeled_path_to_parking`"""
    n = pf.n
    # sorted preferences, read from the top row down, give mu
    mu = Partition(sorted((a - 1 for a in pf.prefs), reverse=True))
    path = DyckPath(n=n, ell=1, m=1, mu=mu)
    labeling = tuple(
        frozenset(i for i, a in enumerate(pf.prefs, start=1) if a == x + 1)
        for x, _ in path.runs()
    )
    return path, labeling


def _check_permutation(w: Sequence[int], n: int) -> None:
    if sorted(w) != list(range(1, n + 1)):
        raise InvalidInputError(f"{tuple(w)} is not a permutation of 1..{n}")


@beartype
def apply_permutation_to_parking(w: Sequence[int], pf: ParkingFunction) -> ParkingFunction:
    """w.(a_1, ..., a_n) = (a_{w(1)}, ..., a_{w(n)})"""
    _check_permutation(w, pf.n)
    return ParkingFunction(tuple(pf.prefs[w[i] - 1] for i in range(pf.n)))


@beartype
def apply_permutation_to_labeling(w: Sequence[int], labeling: Sequence[frozenset[int]]) -> Labeling:
    """relabel so that `labeled_path_to_parking` commutes with the action"""
    n = sum(len(block) for block in labeling)
    _check_permutation(w, n)
    return tuple(
        frozenset(i for i in range(1, n + 1) if w[i - 1] in block) for block in labeling
    )


@beartype
def count_fixed_parking_functions(cycles: Sequence[int]) -> int:
    """Number of parking functions fixed by a permutation of cycle type `cycles`.

    A preference sequence is fixed exactly when it is constant on cycles, so
    this counts assignments of one value in 1..n per cycle that park.
    """
    n = sum(cycles)
    total = 0
    for values in product(range(1, n + 1), repeat=len(cycles)):
        prefs = [v for v, length in zip(values, cycles) for _ in range(length)]
        total += is_parking_function(prefs)
    return total
