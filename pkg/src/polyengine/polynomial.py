"""Exact sparse multivariate polynomials.

A polynomial in x_1, ..., x_N is a dict from exponent vectors (tuples of
length N; variable x_j sits at position j - 1) to nonzero integer or
`Fraction` coefficients. `Polynomial` wraps such a dict with the public
operations; the engines in this package work on the raw dicts directly.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from beartype import beartype

from parkext.combinatorics.partitions import grevlex_key
from parkext.exceptions import InvalidInputError
from parkext.graphs.multigraph import Multigraph

__all__ = [
    "Monomial",
    "Polynomial",
    "graph_weight",
    "times_difference",
]

Monomial = tuple[int, ...]


def _ordered(terms: Mapping[Monomial, int | Fraction]) -> dict[Monomial, int | Fraction]:
    """drop zeros, sort grevlex-descending"""
    return dict(
        sorted(
            ((mon, c) for mon, c in terms.items() if c),
            key=lambda item: grevlex_key(item[0]),
            reverse=True,
        )
    )


@dataclass(frozen=True)
class Polynomial:
    """A polynomial with exact coefficients.

    Iteration order of `terms` is grevlex-descending, so the first term is
    the leading one.

    Attributes:
        nvars: number of variables
        terms: coefficient per exponent vector
    """

    nvars: int
    terms: Mapping[Monomial, int | Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for mon in self.terms:
            if len(mon) != self.nvars:
                raise InvalidInputError(
                    f"exponent vector {mon} does not have {self.nvars} entries"
                )
            if any(e < 0 for e in mon):
                raise InvalidInputError(f"negative exponent in {mon}")
        object.__setattr__(self, "terms", _ordered(self.terms))

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, nvars: int, j: int) -> "Polynomial":
        """x_j, 1-based"""
        if not 1 <= j <= nvars:
            raise InvalidInputError(f"x_{j} is not one of x_1..x_{nvars}")
        return cls(nvars, {tuple(int(i == j - 1) for i in range(nvars)): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient: int | Fraction = 1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coefficient})

    def _check_same_ring(self, other: "Polynomial") -> None:
        if other.nvars != self.nvars:
            raise InvalidInputError(
                f"polynomials in {self.nvars} and {other.nvars} variables do not mix"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_same_ring(other)
        total = dict(self.terms)
        for mon, c in other.terms.items():
            total[mon] = total.get(mon, 0) + c
        return Polynomial(self.nvars, total)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {mon: -c for mon, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(self.nvars, {mon: c * other for mon, c in self.terms.items()})
        self._check_same_ring(other)
        product: dict[Monomial, int | Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = tuple(a + b for a, b in zip(m1, m2))
                product[mon] = product.get(mon, 0) + c1 * c2
        return Polynomial(self.nvars, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: Sequence[int]) -> int | Fraction:
        return self.terms.get(tuple(mon), 0)

    def degree(self) -> int:
        """total degree; -1 for the zero polynomial"""
        return max((sum(mon) for mon in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(mon) for mon in self.terms}) <= 1

    def leading_monomial(self) -> Monomial | None:
        """grevlex-largest monomial"""
        return next(iter(self.terms), None)

    def permute(self, w: Sequence[int]) -> "Polynomial":
        """substitute x_i -> x_{w(i)}, with w in one-line notation on 1..nvars"""
        if sorted(w) != list(range(1, self.nvars + 1)):
            raise InvalidInputError(f"{tuple(w)} is not a permutation of 1..{self.nvars}")
        moved = {}
        for mon, c in self.terms.items():
            image = [0] * self.nvars
            for i, e in enumerate(mon):
                image[w[i] - 1] = e
            moved[tuple(image)] = c
        return Polynomial(self.nvars, moved)

    def substitute_zero(self, j: int) -> "Polynomial":
        """set x_j = 0 and drop that variable"""
        if not 1 <= j <= self.nvars:
            raise InvalidInputError(f"x_{j} is not one of x_1..x_{self.nvars}")
        kept = {}
        for mon, c in self.terms.items():
            if mon[j - 1] == 0:
                kept[mon[: j - 1] + mon[j:]] = c
        return Polynomial(self.nvars - 1, kept)

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mon, c in self.terms.items():
            factors = [
                f"x{j}^{e}" if e > 1 else f"x{j}" for j, e in enumerate(mon, start=1) if e
            ]
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()


def times_difference(
    terms: Mapping[Monomial, int], i: int, j: int | None
) -> dict[Monomial, int]:
    """Multiply a raw polynomial by (x_i - x_j), 0-based indices.

    `j=None` multiplies by x_i alone, which is (x_i - x_j) once x_j is set to 0.
    """
    product: dict[Monomial, int] = {}
    for mon, c in terms.items():
        up = mon[:i] + (mon[i] + 1,) + mon[i + 1 :]
        product[up] = product.get(up, 0) + c
        if j is not None:
            down = mon[:j] + (mon[j] + 1,) + mon[j + 1 :]
            product[down] = product.get(down, 0) - c
    return {mon: c for mon, c in product.items() if c}


@beartype
def graph_weight(graph: Multigraph, *, drop_last: bool = False) -> Polynomial:
    """p(G), the product of (x_i - x_j)^mult over the edges i < j of G.

    Args:
        graph: a multigraph on 1..v
        drop_last: set x_v = 0 and return a polynomial in x_1..x_{v-1}

    ```python
    from parkext.graphs import Multigraph
    graph_weight(Multigraph(3, {(1, 2): 1})).to_string()  # 'x1 - x2'
    ```
    """
    v = graph.num_vertices
    nvars = v - 1 if drop_last else v
    terms: dict[Monomial, int] = {(0,) * nvars: 1}
    for (a, b), count in graph.edges.items():
        i = a - 1
        j = None if drop_last and b == v else b - 1
        for _ in range(count):
            terms = times_difference(terms, i, j)
    return Polynomial(nvars, terms)
