"""(ell, m)-Dyck paths, stored by their area partitions.

A path of size n runs from (-ell + 1, 0) to (mn, n) with unit north and
east steps, staying weakly above the line y = x/m. Row i (counted from the
top) holds mu_i unit boxes between the path and the left edge x = -ell + 1,
so the north step in that row sits at x = mu_i - ell + 1.
"""

from dataclasses import dataclass
from itertools import groupby

from beartype import beartype

from parkext.combinatorics.partitions import (
    Partition,
    _check_parameters,
    _sub_staircase,
    grevlex_key,
    mult_partition,
    staircase_bound,
)
from parkext.exceptions import InvalidInputError

__all__ = ["DyckPath", "enum_dyck_paths", "path_stats", "dyck_path_steps"]


@dataclass(frozen=True)
class DyckPath:
    """An (ell, m)-Dyck path of size n.

    Attributes:
        n: number of north steps
        ell: offset of the starting point
        m: slope parameter
        mu: area partition, length exactly n, zeros kept
    """

    n: int
    ell: int
    m: int
    mu: Partition

    def __post_init__(self):
        _check_parameters(self.n, self.ell, self.m)
        if not isinstance(self.mu, Partition):
            object.__setattr__(self, "mu", Partition(self.mu))
        if len(self.mu) != self.n:
            raise InvalidInputError(
                f"area partition {self.mu} must have exactly n={self.n} entries",
                fix="pad with zeros to the declared length",
            )
        for row, value in enumerate(self.mu, start=1):
            if value > staircase_bound(self.n, self.ell, self.m, row):
                raise InvalidInputError(
                    f"{self.mu} leaves the ({self.ell},{self.m})-staircase in row {row}"
                )

    @property
    def area(self) -> int:
        return self.mu.size

    @property
    def lam(self) -> Partition:
        """vertical run partition lambda(D)"""
        return Partition(sorted((length for _, length in self.runs()), reverse=True))

    def row_x(self, row: int) -> int:
        """x-coordinate of the north step in row `row` (1-based, from the top)"""
        return self.mu[row - 1] - self.ell + 1

    def runs(self) -> list[tuple[int, int]]:
        """maximal vertical runs as (x-coordinate, length), bottom to top"""
        bottom_up = [self.row_x(row) for row in range(self.n, 0, -1)]
        return [(x, len(list(group))) for x, group in groupby(bottom_up)]

    def __str__(self) -> str:
        return f"D{self.mu}[ell={self.ell},m={self.m}]"


@beartype
def enum_dyck_paths(n: int, ell: int = 1, m: int = 1) -> list[DyckPath]:
    """All (ell, m)-Dyck paths of size n, in grevlex order of mu.

    Args:
        n: size
        ell: starting offset
        m: slope

    Returns:
        list of DyckPath. There are ell/(ell+(m+1)n) * binom(ell+(m+1)n, n) of them.
    """
    _check_parameters(n, ell, m)
    areas = sorted(_sub_staircase(n, ell, m), key=grevlex_key)
    return [DyckPath(n=n, ell=ell, m=m, mu=Partition(mu)) for mu in areas]


@beartype
def path_stats(path: DyckPath) -> tuple[Partition, int]:
    """(lambda(D), area(D)).

    lambda(D) is read off the run lengths, which agrees with mult(mu(D)).
    """
    lam = path.lam
    assert lam == mult_partition(path.mu)
    return lam, path.area


@beartype
def dyck_path_steps(path: DyckPath) -> str:
    """the path as a word in N (north) and E (east), from the start point

    Every word has n letters N and ell - 1 + mn letters E.
    """
    steps = []
    x = -path.ell + 1
    for row in range(path.n, 0, -1):
        target = path.row_x(row)
        steps.append("E" * (target - x))
        steps.append("N")
        x = target
    steps.append("E" * (path.m * path.n - x))
    return "".join(steps)
