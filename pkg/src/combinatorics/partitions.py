"""Integer partitions and the orders used throughout parkext.

A `Partition` is an immutable, weakly decreasing tuple of nonnegative
integers. Trailing zeros are kept when given, which is how staircase-bounded
partitions of a declared length are represented; `positive()` drops them.
"""

from collections import Counter
from collections.abc import Iterator, Sequence
import functools

from beartype import beartype

from parkext.exceptions import InvalidInputError

__all__ = [
    "Partition",
    "mult_partition",
    "grevlex_key",
    "grevlex_less",
    "young_contains",
    "dominates",
    "conjugate",
    "enum_partitions",
    "sub_staircase_partitions",
    "staircase_bound",
    "parse_partition",
]


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers.

    Partitions are tuples, so they hash, compare and unpack like tuples and
    can key dictionaries directly. Construction validates the shape.

    ```python
    lam = Partition((4, 4, 3, 0))
    lam.size        # 11
    lam.positive()  # Partition((4, 4, 3))
    ```
    """

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise InvalidInputError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidInputError(
                f"{parts} is not weakly decreasing",
                fix="sort the parts in decreasing order",
            )
        return super().__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Sequence[int]) -> "Partition":
        """sort, drop zeros and build"""
        return cls(sorted((p for p in parts if p > 0), reverse=True))

    @property
    def size(self) -> int:
        """|lambda|, the sum of the parts"""
        return sum(self)

    @property
    def length(self) -> int:
        """number of positive parts"""
        return sum(1 for p in self if p > 0)

    def positive(self) -> "Partition":
        """the same partition with zero parts removed"""
        return Partition(p for p in self if p > 0)

    def padded(self, n: int) -> "Partition":
        """pad with zeros (or trim zeros) to exactly `n` entries"""
        core = self.positive()
        if len(core) > n:
            raise InvalidInputError(f"{self} has more than {n} positive parts")
        return Partition(core + (0,) * (n - len(core)))

    def cycle_counts(self) -> dict[int, int]:
        """multiplicity of each positive part, as {part: count}"""
        return dict(Counter(p for p in self if p > 0))

    def to_string(self) -> str:
        """comma-joined parts, used by serializers"""
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


@beartype
def parse_partition(text: str) -> Partition:
    """parse "3,2,2", "(3,2,2)" or "3 2 2" into a Partition

    The empty string and "()" parse to the empty partition.
    """
    cleaned = text.strip().strip("()[]").replace(" ", ",")
    if not cleaned:
        return Partition(())
    try:
        parts = [int(token) for token in cleaned.split(",") if token]
    except ValueError as error:
        raise InvalidInputError(
            f"cannot read a partition from {text!r}",
            fix='use comma separated parts, e.g. "3,2,2"',
        ) from error
    return Partition(parts)


@beartype
def mult_partition(lam: Sequence[int], *, positive_only: bool = False) -> Partition:
    """Multiplicities of the parts of `lam`, sorted into a partition.

    Zero parts of a partition with declared length count as a part value, so
    runs of equal entries of an area partition (its zero rows included) map
    to their lengths: (4,4,3,3,3,1,0,0) -> (3,2,2,1).

    Args:
        lam: parts, zeros allowed
        positive_only: ignore zero parts, so that (0,0,0) -> ()

    Returns:
        Partition of the number of entries counted.
    """
    counts = Counter(p for p in lam if p > 0 or not positive_only)
    return Partition(sorted(counts.values(), reverse=True))


def grevlex_key(vector: Sequence[int]) -> tuple:
    """Sort key realising graded reverse lexicographic order.

    Vectors are first compared by total degree; for equal degree, v precedes
    w when the last nonzero entry of v - w is positive.
    """
    return (sum(vector), tuple(-x for x in reversed(vector)))


@beartype
def grevlex_less(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when `lam` strictly precedes `mu` in graded reverse lex order.

    Both vectors must have the same length.
    """
    if len(lam) != len(mu):
        raise InvalidInputError(
            f"cannot compare {tuple(lam)} and {tuple(mu)}: lengths differ",
            fix="pad both partitions to the same length",
        )
    return grevlex_key(lam) < grevlex_key(mu)


@beartype
def young_contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when the Young diagram of `mu` fits inside that of `lam`."""
    if len(mu) > len(lam) and any(mu[len(lam) :]):
        return False
    return all(m <= (lam[i] if i < len(lam) else 0) for i, m in enumerate(mu))


@beartype
def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Dominance order: every partial sum of `lam` is at least that of `mu`."""
    if sum(lam) != sum(mu):
        return False
    total_lam = total_mu = 0
    for i in range(max(len(lam), len(mu))):
        total_lam += lam[i] if i < len(lam) else 0
        total_mu += mu[i] if i < len(mu) else 0
        if total_lam < total_mu:
            return False
    return True


@beartype
def conjugate(lam: Sequence[int]) -> Partition:
    """transpose of the Young diagram"""
    parts = [p for p in lam if p > 0]
    if not parts:
        return Partition(())
    return Partition(sum(1 for p in parts if p > j) for j in range(parts[0]))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@functools.cache
def _enum_partitions(n: int) -> tuple[Partition, ...]:
    found = [Partition(p) for p in _partitions_bounded(n, n)]
    found.sort(key=lambda p: grevlex_key(p.padded(n) if n else p))
    return tuple(found)


@beartype
def enum_partitions(n: int) -> list[Partition]:
    """All partitions of n (zeros dropped), in grevlex order of their
    padding to length n.

    Within a fixed size grevlex is a total order, so the output is
    deterministic: for n = 3 it is (1,1,1), (2,1), (3).
    """
    if n < 0:
        raise InvalidInputError(f"cannot partition {n}")
    return list(_enum_partitions(n))


def staircase_bound(n: int, ell: int, m: int, row: int) -> int:
    """largest allowed entry of row `row` (1-based) below the (ell, m) staircase"""
    return ell - 1 + m * (n - row)


def _check_parameters(n: int, ell: int, m: int) -> None:
    if n < 1 or ell < 1 or m < 1:
        raise InvalidInputError(
            f"need n, ell, m >= 1, got n={n}, ell={ell}, m={m}",
        )


def _sub_staircase(n: int, ell: int, m: int) -> Iterator[tuple[int, ...]]:
    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        row = len(prefix) + 1
        if row > n:
            yield prefix
            return
        cap = staircase_bound(n, ell, m, row)
        if prefix:
            cap = min(cap, prefix[-1])
        for value in range(cap, -1, -1):
            yield from extend(prefix + (value,))

    yield from extend(())


@beartype
def sub_staircase_partitions(n: int, ell: int, m: int) -> list[Partition]:
    """Partitions of length n (zeros kept) with lambda_i <= ell - 1 + m(n - i).

    These are exactly the area partitions of (ell, m)-Dyck paths, so there
    are ell/(ell+(m+1)n) * binom(ell+(m+1)n, n) of them. Output is grevlex ordered.
    This counts sorted shapes only. The monomials whose sorted exponents are
    such partitions are listed by
    `parkext.polyengine.staircase.sub_staircase_monomials`, and they are more
    numerous: for n = 3 there are 5 partitions but 16 monomials, the
    dimension of W_3.
    """
    _check_parameters(n, ell, m)
    found = [Partition(p) for p in _sub_staircase(n, ell, m)]
    found.sort(key=grevlex_key)
    return found
