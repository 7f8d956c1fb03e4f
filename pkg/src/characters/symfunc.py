"""Symmetric functions in the Schur (s) and complete homogeneous (h) bases,
graded Frobenius characters, and the parking-function expansions.

The Frobenius map sends chi^lam to s_lam and the coset character of M^lam
to h_lam; it is used here only through those two facts, so a symmetric
function of degree n is just a partition-indexed coefficient vector with a
basis tag.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
import functools

from beartype import beartype

from parkext.characters.class_functions import (
    ClassFunction,
    coset_character,
    inner_product,
    irreducible_character,
)
from parkext.combinatorics.dyck import enum_dyck_paths
from parkext.combinatorics.partitions import Partition, enum_partitions
from parkext.exceptions import InvalidInputError, NotACharacterError
from parkext.utils.constants import Basis

__all__ = [
    "SymFunc",
    "GradedSymFunc",
    "frobenius",
    "frob_h",
    "convert",
    "character_of",
    "graded_frobenius",
    "park_grfrob",
    "grfrob_restricted_to_schur",
]


def _clean(coeffs: Mapping) -> dict[Partition, int | Fraction]:
    cleaned = {}
    for lam, c in coeffs.items():
        c = Fraction(c)
        if c == 0:
            continue
        cleaned[Partition.from_unsorted(lam)] = int(c) if c.denominator == 1 else c
    return cleaned


@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function of degree n in one basis.

    Attributes:
        n: degree
        basis: "s" or "h"
        coeffs: nonzero coefficients keyed by partitions of n
    """

    n: int
    basis: Basis
    coeffs: Mapping[Partition, int | Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = _clean(self.coeffs)
        for lam in cleaned:
            if lam.size != self.n:
                raise InvalidInputError(f"{lam} is not a partition of {self.n}")
        order = {lam: i for i, lam in enumerate(enum_partitions(self.n))}
        ordered = dict(sorted(cleaned.items(), key=lambda item: order[item[0]]))
        object.__setattr__(self, "coeffs", ordered)

    def __getitem__(self, lam: Sequence[int]) -> int | Fraction:
        return self.coeffs.get(Partition.from_unsorted(lam), 0)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_compatible(other)
        total = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            total[lam] = total.get(lam, 0) + c
        return SymFunc(self.n, self.basis, total)

    def __mul__(self, other):
        """Scalar multiple, or the product of two h-expansions
        (h_lam h_mu = h of the merged parts)."""
        if not isinstance(other, SymFunc):
            return SymFunc(self.n, self.basis, {lam: c * other for lam, c in self.coeffs.items()})
        if self.basis != "h" or other.basis != "h":
            return convert(self, "h", integral=False) * convert(other, "h", integral=False)
        product: dict[Partition, int | Fraction] = {}
        for lam, c in self.coeffs.items():
            for mu, d in other.coeffs.items():
                merged = Partition.from_unsorted(tuple(lam) + tuple(mu))
                product[merged] = product.get(merged, 0) + c * d
        return SymFunc(self.n + other.n, "h", product)

    __rmul__ = __mul__

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.n != other.n or self.basis != other.basis:
            raise InvalidInputError(
                f"cannot combine {self.basis}-expansion of degree {self.n} "
                f"with {other.basis}-expansion of degree {other.n}"
            )

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def dimension(self) -> int | Fraction:
        """dimension of the module with this Frobenius image"""
        return dimension_of(self)

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam, c in self.coeffs.items():
            symbol = f"{self.basis}_{lam}"
            terms.append(symbol if c == 1 else f"{c}{symbol}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class GradedSymFunc:
    """A polynomial in q whose coefficients are SymFuncs of a common degree.

    Attributes:
        n: common degree of the coefficients
        basis: common basis of the coefficients
        degrees: coefficient of q^k at index k
    """

    n: int
    basis: Basis
    degrees: tuple[SymFunc, ...]

    def __post_init__(self):
        degrees = tuple(self.degrees)
        for piece in degrees:
            if piece.n != self.n or piece.basis != self.basis:
                raise InvalidInputError(
                    f"graded piece {piece} does not match degree {self.n}, basis {self.basis}"
                )
        # trailing zero pieces carry no information
        while degrees and degrees[-1].is_zero():
            degrees = degrees[:-1]
        object.__setattr__(self, "degrees", degrees)

    def __getitem__(self, k: int) -> SymFunc:
        if 0 <= k < len(self.degrees):
            return self.degrees[k]
        return SymFunc(self.n, self.basis, {})

    def at_q_equals_one(self) -> SymFunc:
        total = SymFunc(self.n, self.basis, {})
        for piece in self.degrees:
            total = total + piece
        return total

    def hilbert_series(self) -> list[int | Fraction]:
        """dimension of each graded piece"""
        return [piece.dimension() for piece in self.degrees]

    def terms(self) -> list[tuple[int, Partition, int | Fraction]]:
        """(degree, partition, coefficient) triples, degree-major"""
        return [
            (k, lam, c) for k, piece in enumerate(self.degrees) for lam, c in piece.coeffs.items()
        ]

    def to_string(self) -> str:
        parts = []
        for k, piece in enumerate(self.degrees):
            if piece.is_zero():
                continue
            body = piece.to_string()
            if len(piece.coeffs) > 1:
                body = f"({body})"
            parts.append(f"{body} q^{k}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_string()


@functools.cache
def _h_in_s(n: int) -> dict[Partition, dict[Partition, int]]:
    """h_mu = sum_lam K[mu][lam] s_lam, with K[mu][lam] = <M^mu, chi^lam>"""
    table = {}
    irreducibles = {lam: irreducible_character(lam) for lam in enum_partitions(n)}
    for mu in enum_partitions(n):
        m_mu = coset_character(mu)
        table[mu] = {
            lam: int(inner_product(m_mu, chi)) for lam, chi in irreducibles.items()
        }
    return table


@functools.cache
def _s_in_h(n: int) -> dict[Partition, dict[Partition, Fraction]]:
    """Invert the h-to-s transition matrix by exact Gauss-Jordan elimination."""
    order = enum_partitions(n)
    size = len(order)
    h_in_s = _h_in_s(n)
    # rows: s_lam, columns: h_mu; solve A X = I with A[lam][mu] = K[mu][lam]
    matrix = [
        [Fraction(h_in_s[mu][lam]) for mu in order] + [Fraction(int(i == j)) for j in range(size)]
        for i, lam in enumerate(order)
    ]
    for col in range(size):
        pivot = next(r for r in range(col, size) if matrix[r][col] != 0)
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        lead = matrix[col][col]
        matrix[col] = [entry / lead for entry in matrix[col]]
        for r in range(size):
            if r != col and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[col])]
    # the inverse sits in the right half; column j of the inverse expresses s_{order[j]}
    return {
        lam: {mu: matrix[i][size + j] for i, mu in enumerate(order)}
        for j, lam in enumerate(order)
    }


@beartype
def frobenius(chi: ClassFunction, *, strict: bool = True) -> SymFunc:
    """Schur expansion of a class function: the coefficient of s_lam is <chi, chi^lam>.

    Args:
        chi: class function on S_n
        strict: require integer coefficients

    Raises:
        NotACharacterError: a coefficient is not an integer and `strict` is set
    """
    coeffs = {
        lam: inner_product(chi, irreducible_character(lam)) for lam in enum_partitions(chi.n)
    }
    if strict and any(c.denominator != 1 for c in coeffs.values()):
        raise NotACharacterError(
            f"multiplicities {[str(c) for c in coeffs.values()]} are not integers",
            fix="pass strict=False to get the rational expansion of a class function",
        )
    return SymFunc(chi.n, "s", coeffs)


@beartype
def frob_h(n: int, multiplicities: Mapping[Partition, int] | Mapping[tuple, int]) -> SymFunc:
    """Frobenius image of the sum of coset modules, sum of c_lam M^lam, as sum of c_lam h_lam."""
    return SymFunc(n, "h", dict(multiplicities))


@beartype
def convert(f: SymFunc, target: Basis, *, integral: bool = True) -> SymFunc:
    """Change of basis between s and h.

    h to s always has integer coefficients. s to h is an exact linear solve.

    Raises:
        NotACharacterError: `integral` is set and the s to h result is not integral
    """
    if f.basis == target:
        return f
    result: dict[Partition, Fraction] = {}
    if target == "s":
        table = _h_in_s(f.n)
        for mu, c in f.coeffs.items():
            for lam, k in table[mu].items():
                result[lam] = result.get(lam, 0) + c * k
    else:
        table = _s_in_h(f.n)
        for lam, c in f.coeffs.items():
            for mu, k in table[lam].items():
                result[mu] = result.get(mu, 0) + c * k
    converted = SymFunc(f.n, target, result)
    if integral and not converted.is_integral():
        raise NotACharacterError(
            f"{f} has no integral {target}-expansion",
            fix="pass integral=False to accept rational coefficients",
        )
    return converted


@beartype
def character_of(f: SymFunc) -> ClassFunction:
    """inverse Frobenius: the class function with image `f`"""
    values = {tau: Fraction(0) for tau in enum_partitions(f.n)}
    build = irreducible_character if f.basis == "s" else coset_character
    for lam, c in f.coeffs.items():
        chi = build(lam)
        for tau in values:
            values[tau] += c * chi.values[tau]
    return ClassFunction(f.n, values)


def dimension_of(f: SymFunc) -> int | Fraction:
    total = character_of(f)((1,) * f.n)
    return int(total) if total.denominator == 1 else total


@beartype
def graded_frobenius(pieces: Sequence[ClassFunction], *, strict: bool = True) -> GradedSymFunc:
    """Schur expansion of a graded character given degree by degree"""
    if not pieces:
        raise InvalidInputError("need at least one graded piece")
    n = pieces[0].n
    return GradedSymFunc(n, "s", tuple(frobenius(chi, strict=strict) for chi in pieces))


@beartype
def park_grfrob(n: int, ell: int = 1, m: int = 1) -> GradedSymFunc:
    """Graded Frobenius image of the (ell, m)-parking space, in the h basis.

    The coefficient of q^k is the sum of h_{lambda(D)} over (ell, m)-Dyck
    paths of area k.

    ```python
    park_grfrob(3).to_string()
    # 'h_(3) q^0 + h_(2,1) q^1 + 2h_(2,1) q^2 + h_(1,1,1) q^3'
    ```
    """
    by_area: dict[int, dict[Partition, int]] = {}
    for path in enum_dyck_paths(n, ell, m):
        piece = by_area.setdefault(path.area, {})
        piece[path.lam] = piece.get(path.lam, 0) + 1
    top = max(by_area)
    return GradedSymFunc(
        n, "h", tuple(SymFunc(n, "h", by_area.get(k, {})) for k in range(top + 1))
    )


@beartype
def grfrob_restricted_to_schur(g: GradedSymFunc) -> GradedSymFunc:
    """every graded piece converted to the Schur basis"""
    return GradedSymFunc(g.n, "s", tuple(convert(piece, "s") for piece in g.degrees))
