"""Finite loopless multigraphs on the vertex set 1..v.

A `Multigraph` stores one multiplicity per unordered pair {i, j}, i < j.
Edges are ordered lexicographically by (i, j); that order indexes
multiplicity vectors everywhere in parkext.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from beartype import beartype

from parkext.exceptions import InvalidInputError

__all__ = [
    "Edge",
    "Multigraph",
    "complete_multigraph",
    "components",
    "is_connected",
]

Edge = tuple[int, int]


def components(num_vertices: int, edges) -> list[int]:
    """Union-find over vertices 1..num_vertices.

    Args:
        num_vertices: v
        edges: iterable of (i, j) pairs to join

    Returns:
        a root label for every vertex, index 0 unused
    """
    parent = list(range(num_vertices + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    return [find(x) for x in range(num_vertices + 1)]


def is_connected(num_vertices: int, edges) -> bool:
    """True when the edges join all of 1..num_vertices into one component"""
    if num_vertices <= 1:
        return True
    roots = components(num_vertices, edges)
    return len(set(roots[1:])) == 1


@dataclass(frozen=True)
class Multigraph:
    """A loopless multigraph.

    Attributes:
        num_vertices: vertices are 1..num_vertices
        edges: multiplicity of each pair (i, j), i < j; zeros are dropped
    """

    num_vertices: int
    edges: Mapping[Edge, int]

    def __post_init__(self):
        cleaned = {}
        for (i, j), count in self.edges.items():
            if i == j:
                raise InvalidInputError(f"loop at vertex {i}", fix="multigraphs here are loopless")
            a, b = min(i, j), max(i, j)
            if a < 1 or b > self.num_vertices:
                raise InvalidInputError(
                    f"edge {(i, j)} leaves the vertex set 1..{self.num_vertices}"
                )
            if count < 0:
                raise InvalidInputError(f"negative multiplicity on edge {(a, b)}")
            if count:
                cleaned[(a, b)] = cleaned.get((a, b), 0) + count
        object.__setattr__(self, "edges", dict(sorted(cleaned.items())))

    @classmethod
    def from_edge_list(cls, num_vertices: int, edge_list: Sequence[Edge]) -> "Multigraph":
        """one entry per edge instance; repeated pairs add up"""
        counts: dict[Edge, int] = {}
        for i, j in edge_list:
            key = (min(i, j), max(i, j))
            counts[key] = counts.get(key, 0) + 1
        return cls(num_vertices, counts)

    def edge_list(self) -> list[Edge]:
        """distinct pairs, lexicographic"""
        return list(self.edges)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self.edges.values())

    @property
    def num_edges(self) -> int:
        """edge count with multiplicity"""
        return sum(self.edges.values())

    def instances(self) -> list[tuple[int, int, int]]:
        """every edge copy as (i, j, copy index), lexicographic"""
        return [(i, j, c) for (i, j), count in self.edges.items() for c in range(count)]

    def is_connected(self) -> bool:
        return is_connected(self.num_vertices, self.edges)

    def is_subgraph_of(self, other: "Multigraph") -> bool:
        return self.num_vertices == other.num_vertices and all(
            other.edges.get(e, 0) >= c for e, c in self.edges.items()
        )

    def submultigraph(self, multiplicities: Sequence[int]) -> "Multigraph":
        """the subgraph with the given multiplicity per edge of `edge_list()`"""
        if len(multiplicities) != len(self.edges):
            raise InvalidInputError(
                f"expected {len(self.edges)} multiplicities, got {len(multiplicities)}"
            )
        for (edge, cap), g in zip(self.edges.items(), multiplicities):
            if not 0 <= g <= cap:
                raise InvalidInputError(f"multiplicity {g} on {edge} outside 0..{cap}")
        return Multigraph(self.num_vertices, dict(zip(self.edges, multiplicities)))

    def minus(self, sub: "Multigraph") -> "Multigraph":
        """remove the edges of `sub`, copy by copy"""
        if not sub.is_subgraph_of(self):
            raise InvalidInputError("cannot remove edges that are not present")
        return Multigraph(
            self.num_vertices, {e: c - sub.edges.get(e, 0) for e, c in self.edges.items()}
        )

    def is_slim(self, sub: "Multigraph") -> bool:
        """True when `self` minus `sub` is connected"""
        return self.minus(sub).is_connected()

    def __str__(self) -> str:
        body = ", ".join(
            f"{i}-{j}" if c == 1 else f"{i}-{j}^{c}" for (i, j), c in self.edges.items()
        )
        return f"G[{self.num_vertices}]{{{body}}}"


@beartype
def complete_multigraph(n: int, ell: int = 1, m: int = 1) -> Multigraph:
    """K_{n+1}^{(ell, m)}: m edges between i < j <= n and ell edges from each i to n + 1.

    With ell = m = 1 this is the complete graph K_{n+1}.
    """
    if n < 1 or ell < 1 or m < 1:
        raise InvalidInputError(f"need n, ell, m >= 1, got n={n}, ell={ell}, m={m}")
    edges = {
        (i, j): (ell if j == n + 1 else m) for i, j in combinations(range(1, n + 2), 2)
    }
    return Multigraph(n + 1, edges)
