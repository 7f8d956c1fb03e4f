"""Bases of the slim-subgraph span: the phi test and the external-activity basis."""

from beartype import beartype

from parkext.config import resolve
from parkext.exceptions import GuardExceededError
from parkext.graphs.multigraph import Multigraph, complete_multigraph
from parkext.graphs.trees import external_activity, spanning_trees
from parkext.polyengine.polynomial import Polynomial, graph_weight
from parkext.polyengine.span import EchelonBasis, GradedSpan, build_span
from parkext.polyengine.staircase import is_sub_staircase, sub_staircase_monomials

__all__ = ["phi_rank", "phi_is_isomorphism", "external_activity_basis"]


@beartype
def phi_rank(span: GradedSpan) -> int:
    """rank of phi applied to the basis of `span`, summed over degrees"""
    total = 0
    for k in span.degrees:
        basis = EchelonBasis()
        for row in span.rows[k]:
            basis.insert(
                {mon: c for mon, c in row.items() if is_sub_staircase(mon, span.ell, span.m)}
            )
        total += len(basis)
    return total


@beartype
def phi_is_isomorphism(
    n: int,
    ell: int = 1,
    m: int = 1,
    *,
    max_n: int | None = None,
    max_subgraphs: int | None = None,
    threads: int | None = None,
) -> bool:
    """True when phi maps V_n^{(ell, m)} isomorphically onto W_n^{(ell, m)}.

    Both spaces must have dimension ell(mn + ell)^(n-1), and phi of the span
    basis must have that rank.
    """
    span = build_span(n, ell, m, max_n=max_n, max_subgraphs=max_subgraphs, threads=threads)
    expected = ell * (m * n + ell) ** (n - 1)
    return (
        span.dimension == expected
        and len(sub_staircase_monomials(n, ell, m)) == expected
        and phi_rank(span) == expected
    )


@beartype
def external_activity_basis(n: int, *, max_n: int | None = None) -> list[Polynomial]:
    """p(K_{n+1} - (T + ex(T))) for every spanning tree T of K_{n+1}.

    Edges are ordered lexicographically. The (n+1)^(n-1) polynomials are a
    basis of V_n; they are returned in n + 1 variables, in the order of
    `parkext.graphs.trees.spanning_trees`.

    Raises:
        GuardExceededError: n is above `max_n`
    """
    limit = resolve("max_n", max_n)
    if n > limit:
        raise GuardExceededError(f"n={n} exceeds max_n={limit}", guard="max_n")
    graph = complete_multigraph(n)
    found = []
    for tree in spanning_trees(graph):
        removed = tree | external_activity(graph, tree)
        kept = [(i, j) for i, j, c in graph.instances() if (i, j, c) not in removed]
        found.append(graph_weight(Multigraph.from_edge_list(n + 1, kept)))
    return found
