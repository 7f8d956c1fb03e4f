"""Restriction from S_N to S_n, in the irreducible and in the coset basis.

Both matrices are built one step at a time. Restricting chi^lam from S_{k+1}
to S_k gives the sum of chi^mu over the mu obtained by removing a corner
box; restricting M^lam gives the sum of M^mu over the mu obtained by
subtracting 1 from one nonzero part, once per part.
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass
import functools

from beartype import beartype
from beartype.typing import Literal

from parkext.combinatorics.partitions import Partition, enum_partitions
from parkext.config import resolve
from parkext.exceptions import GuardExceededError, InvalidInputError

__all__ = [
    "RestrictionMatrix",
    "restriction_matrix",
    "coset_restriction_matrix",
    "remove_box",
    "remove_from_part",
]

MatrixKind = Literal["irreducible", "coset"]


@dataclass(frozen=True)
class RestrictionMatrix:
    """B[lam][mu], the multiplicity of the mu-module of S_n in the restriction
    of the lam-module of S_N.

    Attributes:
        N: size of the larger group
        n: size of the smaller group
        kind: "irreducible" for chi^lam, "coset" for M^lam
        rows: nonzero entries, keyed by lam then mu
    """

    N: int
    n: int
    kind: str
    rows: Mapping[Partition, Mapping[Partition, int]]

    def row(self, lam) -> dict[Partition, int]:
        return dict(self.rows[Partition.from_unsorted(lam)])

    def entry(self, lam, mu) -> int:
        return self.rows[Partition.from_unsorted(lam)].get(Partition.from_unsorted(mu), 0)

    def apply(self, x: Mapping[Partition, int]) -> dict[Partition, int]:
        """sum of x[lam] * row(lam), zeros dropped"""
        total: dict[Partition, int] = {}
        for lam, count in x.items():
            if not count:
                continue
            for mu, b in self.rows[Partition.from_unsorted(lam)].items():
                total[mu] = total.get(mu, 0) + count * b
        return {mu: c for mu, c in total.items() if c}

    def column_sums(self) -> dict[Partition, int]:
        sums = {mu: 0 for mu in enum_partitions(self.n)}
        for row in self.rows.values():
            for mu, b in row.items():
                sums[mu] += b
        return sums


@functools.cache
def remove_box(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """partitions obtained by removing one corner box, each once"""
    parts = list(lam)
    found = []
    for i, p in enumerate(parts):
        if p > 0 and (i + 1 == len(parts) or parts[i + 1] < p):
            smaller = parts[:i] + [p - 1] + parts[i + 1 :]
            found.append((Partition.from_unsorted(smaller), 1))
    return tuple(found)


@functools.cache
def remove_from_part(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """partitions obtained by subtracting 1 from one part, counted once per part"""
    counts: dict[Partition, int] = {}
    for i, p in enumerate(lam):
        if p > 0:
            smaller = Partition.from_unsorted(lam[:i] + (p - 1,) + lam[i + 1 :])
            counts[smaller] = counts.get(smaller, 0) + 1
    return tuple(counts.items())


_STEPS: dict[str, Callable] = {"irreducible": remove_box, "coset": remove_from_part}


@functools.cache
def _restriction_rows(N: int, n: int, kind: str) -> dict[Partition, dict[Partition, int]]:
    step = _STEPS[kind]
    # current[lam] expresses the restriction of lam to S_k, starting at k = N
    current = {lam: {lam: 1} for lam in enum_partitions(N)}
    for _ in range(N - n):
        following = {}
        for lam, row in current.items():
            down: dict[Partition, int] = {}
            for mu, count in row.items():
                for nu, times in step(mu):
                    down[nu] = down.get(nu, 0) + count * times
            following[lam] = down
        current = following
    return current


def _check_sizes(N: int, n: int, max_N: int | None) -> None:
    if not 1 <= n <= N:
        raise InvalidInputError(f"need 1 <= n <= N, got n={n}, N={N}")
    limit = resolve("max_extension_N", max_N)
    if N > limit:
        raise GuardExceededError(
            f"N={N} exceeds max_extension_N={limit}", guard="max_extension_N"
        )


@beartype
def restriction_matrix(N: int, n: int, *, max_N: int | None = None) -> RestrictionMatrix:
    """B[lam][mu] = <Res chi^lam, chi^mu> for lam |- N and mu |- n.

    Every entry is a nonnegative integer, and every mu has a positive
    column sum.

    Raises:
        InvalidInputError: n > N or n < 1
        GuardExceededError: N is above `max_extension_N`
    """
    _check_sizes(N, n, max_N)
    return RestrictionMatrix(N=N, n=n, kind="irreducible", rows=_restriction_rows(N, n, "irreducible"))


@beartype
def coset_restriction_matrix(N: int, n: int, *, max_N: int | None = None) -> RestrictionMatrix:
    """Res M^lam from S_N to S_n in the coset basis of S_n."""
    _check_sizes(N, n, max_N)
    return RestrictionMatrix(N=N, n=n, kind="coset", rows=_restriction_rows(N, n, "coset"))
