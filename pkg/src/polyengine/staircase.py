"""Dyck-path polynomials and the projection onto sub-staircase monomials.

Each (ell, m)-Dyck path D picks a subgraph G(D) of K_{n+1}^{(ell, m)}: the
boxes of row i carry edge labels, and G(D) collects the labels of the first
mu_i boxes of every row. The path polynomial is p(D) = p(G(D)).

`phi` sets x_{n+1} = 0 and keeps only sub-staircase monomials, those whose
exponents sort to a partition inside the (ell, m)-staircase.
"""

from collections.abc import Sequence
from dataclasses import dataclass
import functools

from beartype import beartype
from more_itertools import distinct_permutations

from parkext.characters.class_functions import ClassFunction, class_representative
from parkext.combinatorics.dyck import DyckPath
from parkext.combinatorics.partitions import (
    Partition,
    _check_parameters,
    dominates,
    grevlex_key,
    grevlex_less,
    staircase_bound,
    sub_staircase_partitions,
)
from parkext.exceptions import InvalidInputError
from parkext.graphs.multigraph import Edge, Multigraph
from parkext.polyengine.polynomial import Monomial, Polynomial, graph_weight

__all__ = [
    "BoxLabeling",
    "box_labeling",
    "path_graph",
    "path_poly",
    "is_sub_staircase",
    "sub_staircase_monomials",
    "phi",
    "staircase_character",
    "check_triangularity",
    "check_dominance_triangularity",
]


@dataclass(frozen=True)
class BoxLabeling:
    """Edge labels on the boxes of the (ell, m)-staircase.

    Attributes:
        n: number of rows
        ell: multiplicity of the edges {i, n+1}
        m: multiplicity of the edges {i, j}, j <= n
        rows: `rows[i - 1]` lists the labels of row i from left to right
    """

    n: int
    ell: int
    m: int
    rows: tuple[tuple[Edge, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.rows, start=1):
            if len(row) != staircase_bound(self.n, self.ell, self.m, i):
                raise InvalidInputError(
                    f"row {i} has {len(row)} labels, the staircase allows "
                    f"{staircase_bound(self.n, self.ell, self.m, i)}"
                )

    def row(self, i: int) -> tuple[Edge, ...]:
        """labels of row i, 1-based"""
        return self.rows[i - 1]

    def graph(self, mu: Sequence[int]) -> Multigraph:
        """the multigraph made of the first mu_i labels of every row i"""
        edges: list[Edge] = []
        for row, count in zip(self.rows, mu):
            edges.extend(row[:count])
        return Multigraph.from_edge_list(self.n + 1, edges)


@functools.cache
def _box_labeling(n: int, ell: int, m: int) -> BoxLabeling:
    rows = []
    for i in range(1, n + 1):
        row: list[Edge] = []
        for j in range(n + 1, i, -1):
            copies = ell if j == n + 1 else m
            if j == i + 1:
                copies -= 1
            row.extend([(i, j)] * copies)
        rows.append(tuple(row))
    return BoxLabeling(n=n, ell=ell, m=m, rows=tuple(rows))


@beartype
def box_labeling(n: int, ell: int = 1, m: int = 1) -> BoxLabeling:
    """Label every box of the (ell, m)-staircase with an edge.

    Row i lists the edges {i, j}, j > i, with j decreasing. Each edge
    appears as often as in K_{n+1}^{(ell, m)}, except the consecutive edge
    {i, i+1}, which appears once less. Row n thus holds ell - 1 copies of
    {n, n+1}.

    ```python
    box_labeling(5).row(1)  # ((1, 6), (1, 5), (1, 4), (1, 3))
    ```
    """
    _check_parameters(n, ell, m)
    return _box_labeling(n, ell, m)


@beartype
def path_graph(path: DyckPath) -> Multigraph:
    """G(D)"""
    return box_labeling(path.n, path.ell, path.m).graph(path.mu)


@beartype
def path_poly(path: DyckPath, *, reduced: bool = False) -> Polynomial:
    """p(D), homogeneous of degree area(D).

    Args:
        path: a Dyck path
        reduced: return the polynomial with x_{n+1} = 0, in x_1..x_n
    """
    return graph_weight(path_graph(path), drop_last=reduced)


def is_sub_staircase(exponents: Sequence[int], ell: int = 1, m: int = 1) -> bool:
    """True when the sorted exponents fit under the (ell, m)-staircase of length len(exponents)"""
    n = len(exponents)
    ordered = sorted(exponents, reverse=True)
    return all(e <= staircase_bound(n, ell, m, row) for row, e in enumerate(ordered, start=1))


@functools.cache
def _sub_staircase_monomials(n: int, ell: int, m: int) -> tuple[Monomial, ...]:
    found = [
        tuple(mon)
        for lam in sub_staircase_partitions(n, ell, m)
        for mon in distinct_permutations(lam)
    ]
    found.sort(key=grevlex_key)
    return tuple(found)


@beartype
def sub_staircase_monomials(n: int, ell: int = 1, m: int = 1) -> list[Monomial]:
    """Exponent vectors of the sub-staircase monomials in x_1..x_n, grevlex ascending.

    They form a basis of W_n^{(ell, m)}; there are ell(ell + mn)^(n-1) of them.
    """
    _check_parameters(n, ell, m)
    return list(_sub_staircase_monomials(n, ell, m))


@beartype
def phi(p: Polynomial, n: int, ell: int = 1, m: int = 1) -> Polynomial:
    """Project onto the sub-staircase monomials.

    A polynomial in n + 1 variables first has x_{n+1} set to 0; a polynomial
    in n variables is taken to be in that chart already.

    Raises:
        InvalidInputError: p has neither n nor n + 1 variables
    """
    if p.nvars == n + 1:
        p = p.substitute_zero(n + 1)
    elif p.nvars != n:
        raise InvalidInputError(f"phi for n={n} needs n or n+1 variables, got {p.nvars}")
    return Polynomial(n, {mon: c for mon, c in p.terms.items() if is_sub_staircase(mon, ell, m)})


def _cycles(w: Sequence[int]) -> list[list[int]]:
    seen: set[int] = set()
    cycles = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cycle = []
        i = start
        while i not in seen:
            seen.add(i)
            cycle.append(i)
            i = w[i - 1]
        cycles.append(cycle)
    return cycles


@beartype
def staircase_character(n: int, ell: int, m: int, k: int) -> ClassFunction:
    """Character of S_n on the degree-k sub-staircase monomials.

    S_n permutes the monomials, so the value at a class is the number of
    degree-k monomials whose exponents are constant on every cycle.
    """
    monomials = [mon for mon in sub_staircase_monomials(n, ell, m) if sum(mon) == k]

    def fixed(tau: Partition) -> int:
        cycles = _cycles(class_representative(tau))
        return sum(
            all(len({mon[i - 1] for i in cycle}) == 1 for cycle in cycles) for mon in monomials
        )

    return ClassFunction.from_callable(n, fixed)


def _projected(path: DyckPath) -> tuple[Polynomial, Monomial]:
    p = phi(path_poly(path, reduced=True), path.n, path.ell, path.m)
    return p, tuple(path.mu)


@beartype
def check_triangularity(path: DyckPath) -> tuple[bool, Monomial | None]:
    """Check that phi(p(D)) = x^mu(D) + (terms whose exponent partition is grevlex-below mu(D)).

    Returns:
        (verdict, leading monomial of phi(p(D)))
    """
    p, mu = _projected(path)
    ok = p.coefficient(mu) == 1
    for mon in p.terms:
        if mon != mu and not grevlex_less(tuple(sorted(mon, reverse=True)), mu):
            ok = False
            break
    return ok, p.leading_monomial()


@beartype
def check_dominance_triangularity(path: DyckPath) -> bool:
    """The same test with grevlex replaced by dominance.

    Fails as soon as a monomial other than x^mu(D) has an exponent
    partition that mu(D) does not strictly dominate.
    """
    p, mu = _projected(path)
    if p.coefficient(mu) != 1:
        return False
    for mon in p.terms:
        if mon == mu:
            continue
        shape = tuple(sorted(mon, reverse=True))
        if shape == mu or not dominates(mu, shape):
            return False
    return True
