"""
Graphs Module

Multigraphs, Tutte polynomials by bundled deletion-contraction, colouring
censuses, spanning trees and activities.
"""

__all__ = [
    "Multigraph",
    "complete_multigraph",
    "BivariatePolynomial",
    "tutte",
    "tutte_hilbert",
    "initial_coefficients_check",
    "coboundary_coefficients",
    "coboundary_to_tutte_check",
    "spanning_trees",
    "external_activity",
    "internal_activity",
    "activity_tutte",
    "corank_nullity_tutte",
    "count_connected_spanning_subgraphs",
]


def __getattr__(name):
    if name in {"Multigraph", "complete_multigraph"}:
        from . import multigraph

        return getattr(multigraph, name)
    elif name in {"BivariatePolynomial", "tutte", "tutte_hilbert", "initial_coefficients_check"}:
        from . import tutte_poly

        return getattr(tutte_poly, name)
    elif name in {"coboundary_coefficients", "coboundary_to_tutte_check"}:
        from . import coloring

        return getattr(coloring, name)
    elif name in __all__:
        from . import trees

        return getattr(trees, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return __all__
