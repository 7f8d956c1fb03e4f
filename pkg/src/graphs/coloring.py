"""Colouring census of a multigraph and the coboundary substitution."""

from fractions import Fraction
from itertools import product

from beartype import beartype

from parkext.config import resolve
from parkext.exceptions import GuardExceededError, InvalidInputError
from parkext.graphs.multigraph import Multigraph
from parkext.graphs.tutte_poly import tutte

__all__ = ["coboundary_coefficients", "coboundary_to_tutte_check"]


@beartype
def coboundary_coefficients(
    graph: Multigraph,
    num_colors: int,
    *,
    max_colorings: int | None = None,
) -> list[int]:
    """c_0, ..., c_e: the number of vertex colourings with exactly i monochromatic edges.

    Each copy of a multi-edge counts, so a monochromatic bundle of k copies
    contributes k.

    Args:
        graph: the multigraph
        num_colors: lambda, the number of colours
        max_colorings: guard on lambda^v, defaults to the `max_colorings` setting

    Raises:
        GuardExceededError: lambda^v exceeds the guard
    """
    if num_colors < 1:
        raise InvalidInputError(f"need at least one colour, got {num_colors}")
    limit = resolve("max_colorings", max_colorings)
    total = num_colors**graph.num_vertices
    if total > limit:
        raise GuardExceededError(
            f"{total} colourings exceed the limit {limit}", guard="max_colorings"
        )
    census = [0] * (graph.num_edges + 1)
    edges = list(graph.edges.items())
    for coloring in product(range(num_colors), repeat=graph.num_vertices):
        monochromatic = sum(k for (i, j), k in edges if coloring[i - 1] == coloring[j - 1])
        census[monochromatic] += 1
    return census


@beartype
def coboundary_to_tutte_check(
    graph: Multigraph,
    num_colors: int,
    nu: int,
    *,
    max_colorings: int | None = None,
) -> bool:
    """Compare the colouring census with the Tutte polynomial at one point.

    Checks, in exact arithmetic,

        sum_i c_i(G; lambda) nu^i
            == lambda (nu - 1)^(v - 1) T_G((lambda + nu - 1)/(nu - 1), nu)

    Raises:
        InvalidInputError: nu == 1, where the right side is undefined
    """
    if nu == 1:
        raise InvalidInputError("nu must differ from 1")
    census = coboundary_coefficients(graph, num_colors, max_colorings=max_colorings)
    left = sum(c * Fraction(nu) ** i for i, c in enumerate(census))
    x = Fraction(num_colors + nu - 1, nu - 1)
    right = num_colors * Fraction(nu - 1) ** (graph.num_vertices - 1) * tutte(graph).evaluate(x, nu)
    return left == right
