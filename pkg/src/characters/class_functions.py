"""Exact class functions on the symmetric groups.

Conjugacy classes of S_n are indexed by cycle types, i.e. partitions of n
with zeros dropped. Values are `fractions.Fraction` throughout; nothing in
this module uses floating point.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
import functools
from math import factorial, gcd

from beartype import beartype
from sympy import factorint

from parkext.combinatorics.parking import count_fixed_parking_functions
from parkext.combinatorics.partitions import Partition, enum_partitions
from parkext.exceptions import GuardExceededError, InvalidInputError, NotACharacterError
from parkext.utils.constants import MAX_DIRECT_PARK_N, NamedCharacter

__all__ = [
    "ClassFunction",
    "z",
    "class_size",
    "character_value",
    "irreducible_character",
    "coset_character",
    "inner_product",
    "character_table",
    "permutation_character",
    "named_character",
    "tensor",
    "dimension",
    "induction_product",
    "restrict",
    "sym_power",
    "lie_character",
    "park_character_direct",
    "class_representative",
    "power_cycle_type",
]


def _cycle_type(tau: Sequence[int]) -> Partition:
    return Partition.from_unsorted(tau)


@dataclass(frozen=True)
class ClassFunction:
    """A function on the conjugacy classes of S_n.

    Attributes:
        n: degree of the symmetric group
        values: one exact value per cycle type of n
    """

    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        normalized = {}
        for tau, value in self.values.items():
            normalized[_cycle_type(tau)] = Fraction(value)
        classes = enum_partitions(self.n)
        if set(normalized) != set(classes):
            raise InvalidInputError(
                f"a class function on S_{self.n} needs a value on each of the "
                f"{len(classes)} classes, got {len(normalized)}"
            )
        object.__setattr__(self, "values", {tau: normalized[tau] for tau in classes})

    @classmethod
    def from_callable(cls, n: int, func: Callable[[Partition], int | Fraction]) -> "ClassFunction":
        """tabulate `func` on every cycle type of n"""
        return cls(n=n, values={tau: func(tau) for tau in enum_partitions(n)})

    def __call__(self, tau: Sequence[int]) -> Fraction:
        return self.values[_cycle_type(tau)]

    def classes(self) -> list[Partition]:
        return list(self.values)

    def _check_same_group(self, other: "ClassFunction") -> None:
        if other.n != self.n:
            raise InvalidInputError(
                f"class functions live on different groups: S_{self.n} and S_{other.n}"
            )

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same_group(other)
        return ClassFunction(self.n, {t: v + other.values[t] for t, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check_same_group(other)
        return ClassFunction(self.n, {t: v - other.values[t] for t, v in self.values.items()})

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.n, {t: -v for t, v in self.values.items()})

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            return tensor(self, other)
        return ClassFunction(self.n, {t: v * other for t, v in self.values.items()})

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())

    def as_list(self) -> list[Fraction]:
        """values in the order of `enum_partitions(n)`"""
        return list(self.values.values())

    def __str__(self) -> str:
        body = ", ".join(f"{tau}: {value}" for tau, value in self.values.items())
        return f"ClassFunction(S_{self.n}; {body})"


def z(tau: Sequence[int]) -> int:
    """order of the centralizer of a permutation of cycle type tau"""
    result = 1
    for part, count in _cycle_type(tau).cycle_counts().items():
        result *= part**count * factorial(count)
    return result


@beartype
def class_size(tau: Sequence[int]) -> int:
    """number of permutations of cycle type tau, n!/z(tau)"""
    return factorial(sum(tau)) // z(tau)


def _strip(parts) -> tuple[int, ...]:
    return tuple(p for p in parts if p > 0)


@functools.cache
def _murnaghan_nakayama(lam: tuple[int, ...], tau: tuple[int, ...]) -> int:
    if not tau:
        return 1 if not lam else 0
    r, rest = tau[0], tau[1:]
    k = len(lam)
    # beta numbers: removing a border strip of length r moves one bead down r
    beta = [lam[i] + k - 1 - i for i in range(k)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = sorted((beads - {b}) | {target}, reverse=True)
        smaller = _strip(moved[i] - (k - 1 - i) for i in range(k))
        total += (-1) ** height * _murnaghan_nakayama(smaller, rest)
    return total


def character_value(lam: Sequence[int], tau: Sequence[int]) -> int:
    """chi^lam at the class tau, by the Murnaghan-Nakayama rule"""
    if sum(lam) != sum(tau):
        raise InvalidInputError(f"{tuple(lam)} and {tuple(tau)} have different sizes")
    return _murnaghan_nakayama(_strip(lam), tuple(_cycle_type(tau)))


@beartype
def irreducible_character(lam: Sequence[int]) -> ClassFunction:
    """The irreducible character chi^lam of S_|lam|.

    ```python
    irreducible_character((2, 1)).as_list()  # [2, 0, -1] on (1,1,1), (2,1), (3)
    ```
    """
    lam = Partition.from_unsorted(lam)
    return ClassFunction.from_callable(lam.size, lambda tau: character_value(lam, tau))


@functools.cache
def _coset_value(capacities: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    c, rest = cycles[0], cycles[1:]
    total = 0
    for i, cap in enumerate(capacities):
        if cap >= c:
            remaining = capacities[:i] + (cap - c,) + capacities[i + 1 :]
            total += _coset_value(tuple(sorted(remaining, reverse=True)), rest)
    return total


@beartype
def coset_character(lam: Sequence[int]) -> ClassFunction:
    """Character of the coset module M^lam.

    The value at tau counts the ways to share the cycles of tau out among
    labeled blocks of sizes lam_1, lam_2, ... (the tabloids it fixes).
    """
    lam = Partition.from_unsorted(lam)
    return ClassFunction.from_callable(
        lam.size, lambda tau: _coset_value(tuple(lam), tuple(tau))
    )


@beartype
def inner_product(chi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/n!) sum over classes of |class| chi(tau) psi(tau)"""
    chi._check_same_group(psi)
    total = sum(
        class_size(tau) * value * psi.values[tau] for tau, value in chi.values.items()
    )
    return Fraction(total, factorial(chi.n))


@functools.cache
def _character_table(n: int) -> dict[Partition, ClassFunction]:
    return {lam: irreducible_character(lam) for lam in enum_partitions(n)}


@beartype
def character_table(n: int) -> dict[Partition, ClassFunction]:
    """every irreducible character of S_n, keyed by its partition"""
    return dict(_character_table(n))


@beartype
def permutation_character(n: int, fixed_points: Callable[[Partition], int]) -> ClassFunction:
    """character of a permutation module, given the number of fixed points per class"""
    return ClassFunction.from_callable(n, fixed_points)


@beartype
def named_character(kind: NamedCharacter, n: int) -> ClassFunction:
    """trivial, sign, reflection or regular character of S_n

    The reflection character is the defining permutation character minus
    the trivial one.
    """
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    if kind == "trivial":
        return ClassFunction.from_callable(n, lambda tau: 1)
    if kind == "sign":
        return ClassFunction.from_callable(n, lambda tau: (-1) ** (n - len(tau)))
    if kind == "reflection":
        return permutation_character(n, lambda tau: tau.cycle_counts().get(1, 0) - 1)
    return permutation_character(n, lambda tau: factorial(n) if tau.length == n else 0)


@beartype
def tensor(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    """pointwise product, the character of the tensor product"""
    chi._check_same_group(psi)
    return ClassFunction(chi.n, {t: v * psi.values[t] for t, v in chi.values.items()})


@beartype
def dimension(chi: ClassFunction) -> Fraction:
    """value at the identity"""
    return chi((1,) * chi.n)


def _splittings(tau: Partition, a: int):
    """pairs (tau1, tau2) of cycle types with tau1 + tau2 = tau, |tau1| = a"""
    counts = sorted(tau.cycle_counts().items())

    def choose(index: int, left: list[int], size: int):
        if index == len(counts):
            if size == a:
                yield left
            return
        part, count = counts[index]
        for k in range(count + 1):
            if size + k * part > a:
                break
            yield from choose(index + 1, left + [part] * k, size + k * part)

    for left in choose(0, [], 0):
        right = list(tau)
        for part in left:
            right.remove(part)
        yield Partition.from_unsorted(left), Partition.from_unsorted(right)


@beartype
def induction_product(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    """Ind from S_a x S_b to S_{a+b} of chi x psi.

    Frobenius sends this product to the product of symmetric functions.
    """
    a, b = chi.n, psi.n

    def value(tau: Partition) -> Fraction:
        total = Fraction(0)
        for left, right in _splittings(tau, a):
            total += Fraction(z(tau), z(left) * z(right)) * chi(left) * psi(right)
        return total

    return ClassFunction.from_callable(a + b, value)


@beartype
def restrict(chi: ClassFunction, n: int) -> ClassFunction:
    """Restriction from S_N to S_n acting on the first n letters."""
    if n > chi.n or n < 0:
        raise InvalidInputError(f"cannot restrict a character of S_{chi.n} to S_{n}")
    padding = (1,) * (chi.n - n)
    return ClassFunction.from_callable(n, lambda tau: chi(tuple(tau) + padding))


def power_cycle_type(tau: Sequence[int], i: int) -> Partition:
    """cycle type of g^i when g has cycle type tau"""
    parts = []
    for d in tau:
        g = gcd(d, i)
        parts.extend([d // g] * g)
    return Partition.from_unsorted(parts)


@beartype
def sym_power(chi: ClassFunction, k: int) -> ClassFunction:
    """Character of the k-th symmetric power, by the Newton recurrence

    h_k(g) = (1/k) * sum_{i=1..k} chi(g^i) h_{k-i}(g)

    Raises:
        NotACharacterError: the result is not integer valued (chi was not a
            character).
    """
    if k < 0:
        raise InvalidInputError(f"symmetric power must be nonnegative, got {k}")

    def value(tau: Partition) -> Fraction:
        powers = [chi(power_cycle_type(tau, i)) for i in range(1, k + 1)]
        h = [Fraction(1)]
        for j in range(1, k + 1):
            h.append(sum(powers[i - 1] * h[j - i] for i in range(1, j + 1)) / j)
        return h[k]

    result = ClassFunction.from_callable(chi.n, value)
    if not result.is_integral():
        raise NotACharacterError(f"Sym^{k} produced non-integral values {result.as_list()}")
    return result


def _mobius(d: int) -> int:
    exponents = factorint(d).values()
    if any(e > 1 for e in exponents):
        return 0
    return (-1) ** len(exponents)


@beartype
def lie_character(n: int) -> ClassFunction:
    """Character of Lie_n, induced from a faithful character of the
    (n+1)-cycle group up to S_{n+1}.

    Nonzero only on classes (d, d, ..., d), where it equals
    mobius(d) * z(tau) / (n + 1).
    """
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    N = n + 1

    def value(tau: Partition) -> Fraction:
        d = tau[0]
        if any(part != d for part in tau):
            return Fraction(0)
        return Fraction(_mobius(d) * z(tau), N)

    return ClassFunction.from_callable(N, value)


@beartype
def park_character_direct(n: int, *, max_n: int = MAX_DIRECT_PARK_N) -> ClassFunction:
    """Permutation character of Park_n, counting fixed parking functions per class.

    Args:
        n: size
        max_n: guard on n

    Raises:
        GuardExceededError: n > max_n
    """
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    if n > max_n:
        raise GuardExceededError(
            f"direct parking character of size {n} exceeds the limit {max_n}",
            guard="max_n",
        )
    return permutation_character(n, count_fixed_parking_functions)


def class_representative(tau: Sequence[int]) -> tuple[int, ...]:
    """A permutation of cycle type tau in one-line notation.

    Cycles are (1..tau_1), (tau_1+1..tau_1+tau_2), ... so that fixed points
    come last; letters past |tau| are never moved.
    """
    image = []
    start = 1
    for length in _cycle_type(tau):
        block = list(range(start, start + length))
        image.extend(block[1:] + block[:1])
        start += length
    return tuple(image)
