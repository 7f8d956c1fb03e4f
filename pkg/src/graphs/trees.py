"""Spanning trees, activities, and the subgraph expansions of the Tutte polynomial.

These are slow, direct enumerations. They serve as independent oracles for
`parkext.graphs.tutte_poly.tutte` and as the source of the external-activity
basis of the slim-subgraph span.

Edge copies are addressed as `(i, j, c)` triples (see
`Multigraph.instances`); the total edge order is the lexicographic order
of those triples unless a different `order` is passed.
"""

from collections.abc import Sequence
from itertools import combinations, product
from math import comb

from beartype import beartype

from parkext.exceptions import GuardExceededError, InvalidInputError
from parkext.graphs.multigraph import Multigraph, components, is_connected
from parkext.graphs.tutte_poly import BivariatePolynomial

__all__ = [
    "EdgeCopy",
    "spanning_trees",
    "external_activity",
    "internal_activity",
    "activity_tutte",
    "corank_nullity_tutte",
    "count_connected_spanning_subgraphs",
]

EdgeCopy = tuple[int, int, int]

MAX_SUBSET_EDGES = 16


def _is_forest(num_vertices: int, edges: Sequence[EdgeCopy]) -> bool:
    roots = list(range(num_vertices + 1))

    def find(x: int) -> int:
        while roots[x] != x:
            roots[x] = roots[roots[x]]
            x = roots[x]
        return x

    for i, j, _ in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        roots[ri] = rj
    return True


@beartype
def spanning_trees(graph: Multigraph) -> list[frozenset[EdgeCopy]]:
    """Every spanning tree, as a set of edge copies.

    Raises:
        InvalidInputError: the graph is not connected
    """
    if not graph.is_connected():
        raise InvalidInputError(f"{graph} is not connected")
    size = graph.num_vertices - 1
    return [
        frozenset(tree)
        for tree in combinations(graph.instances(), size)
        if _is_forest(graph.num_vertices, tree)
    ]


def _rank(num_vertices: int, edges) -> int:
    roots = components(num_vertices, ((i, j) for i, j, *_ in edges))
    return num_vertices - len(set(roots[1:]))


def _tree_path(tree: frozenset[EdgeCopy], start: int, end: int) -> list[EdgeCopy]:
    adjacency: dict[int, list[tuple[int, EdgeCopy]]] = {}
    for edge in tree:
        i, j, _ = edge
        adjacency.setdefault(i, []).append((j, edge))
        adjacency.setdefault(j, []).append((i, edge))
    stack = [(start, [])]
    seen = {start}
    while stack:
        vertex, path = stack.pop()
        if vertex == end:
            return path
        for neighbour, edge in adjacency.get(vertex, ()):
            if neighbour not in seen:
                seen.add(neighbour)
                stack.append((neighbour, path + [edge]))
    raise InvalidInputError(f"vertices {start} and {end} are not joined by the tree")


def _position(order: Sequence[EdgeCopy] | None):
    if order is None:
        return lambda edge: edge
    index = {edge: i for i, edge in enumerate(order)}
    return lambda edge: index[edge]


@beartype
def external_activity(
    graph: Multigraph,
    tree: frozenset[EdgeCopy],
    order: Sequence[EdgeCopy] | None = None,
) -> frozenset[EdgeCopy]:
    """Edges e outside `tree` that are the smallest edge of the unique cycle in tree + e."""
    position = _position(order)
    active = set()
    for edge in graph.instances():
        if edge in tree:
            continue
        cycle = _tree_path(tree, edge[0], edge[1]) + [edge]
        if min(cycle, key=position) == edge:
            active.add(edge)
    return frozenset(active)


@beartype
def internal_activity(
    graph: Multigraph,
    tree: frozenset[EdgeCopy],
    order: Sequence[EdgeCopy] | None = None,
) -> frozenset[EdgeCopy]:
    """Tree edges that are the smallest edge of their fundamental cut."""
    position = _position(order)
    active = set()
    for edge in tree:
        roots = components(graph.num_vertices, ((i, j) for i, j, _ in tree - {edge}))
        cut = [f for f in graph.instances() if roots[f[0]] != roots[f[1]]]
        if min(cut, key=position) == edge:
            active.add(edge)
    return frozenset(active)


@beartype
def activity_tutte(graph: Multigraph) -> BivariatePolynomial:
    """sum over spanning trees of x^(internal activity) y^(external activity)"""
    coeffs: dict[tuple[int, int], int] = {}
    for tree in spanning_trees(graph):
        key = (len(internal_activity(graph, tree)), len(external_activity(graph, tree)))
        coeffs[key] = coeffs.get(key, 0) + 1
    return BivariatePolynomial(coeffs)


@beartype
def corank_nullity_tutte(graph: Multigraph, *, max_edges: int = MAX_SUBSET_EDGES) -> BivariatePolynomial:
    """sum over edge subsets A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))

    Raises:
        GuardExceededError: more than `max_edges` edge copies
    """
    edges = graph.instances()
    if len(edges) > max_edges:
        raise GuardExceededError(
            f"{len(edges)} edges means 2^{len(edges)} subsets; the limit is {max_edges} edges",
            guard="max_edges",
        )
    full_rank = _rank(graph.num_vertices, edges)
    by_exponent: dict[tuple[int, int], int] = {}
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            rank = _rank(graph.num_vertices, subset)
            key = (full_rank - rank, size - rank)
            by_exponent[key] = by_exponent.get(key, 0) + 1
    # expand (x-1)^a (y-1)^b
    coeffs: dict[tuple[int, int], int] = {}
    for (a, b), count in by_exponent.items():
        for i in range(a + 1):
            for j in range(b + 1):
                term = count * comb(a, i) * (-1) ** (a - i) * comb(b, j) * (-1) ** (b - j)
                coeffs[(i, j)] = coeffs.get((i, j), 0) + term
    return BivariatePolynomial(coeffs)


@beartype
def count_connected_spanning_subgraphs(graph: Multigraph) -> int:
    """Number of multiplicity vectors 0 <= h <= mult whose support is connected.

    Complementation matches these with the slim subgraphs of `graph`.
    """
    edges = graph.edge_list()
    caps = graph.multiplicities()
    count = 0
    for vector in product(*(range(c + 1) for c in caps)):
        if is_connected(graph.num_vertices, (e for e, h in zip(edges, vector) if h)):
            count += 1
    return count
