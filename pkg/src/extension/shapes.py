"""Near rectangles: the irreducibles of S_n that extend to S_{n+1}."""

from collections.abc import Sequence

from beartype import beartype
from sympy import divisors

from parkext.combinatorics.partitions import Partition, enum_partitions

__all__ = ["near_rectangle", "near_rectangles"]


def _shapes(n: int) -> set[Partition]:
    """(b^(a-1), b-1) for every factorisation a * b = n + 1"""
    found = set()
    for a in divisors(n + 1):
        b = (n + 1) // a
        found.add(Partition.from_unsorted([b] * (a - 1) + [b - 1]))
    return found


@beartype
def near_rectangle(lam: Sequence[int]) -> bool:
    """True when lam is an a x b rectangle with n + 1 boxes minus its corner box.

    ```python
    near_rectangle((2, 1))  # True: 2 x 2 minus a corner
    near_rectangle((3, 1))  # False
    ```
    """
    lam = Partition.from_unsorted(lam)
    return lam in _shapes(lam.size)


@beartype
def near_rectangles(n: int) -> list[Partition]:
    """every near rectangle of size n, in grevlex order"""
    shapes = _shapes(n)
    return [lam for lam in enum_partitions(n) if lam in shapes]
