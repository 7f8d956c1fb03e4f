"""
Polynomial Engine Module

Exact sparse polynomials, the slim-subgraph spans V_n^{(ell, m)} with their
graded characters, and the Dyck-path polynomials that prove them isomorphic
to the sub-staircase monomial spaces.
"""

__all__ = [
    "Polynomial",
    "graph_weight",
    "GradedSpan",
    "EchelonBasis",
    "enum_slim",
    "build_span",
    "hilbert_series",
    "degree_character",
    "rank_of",
    "BoxLabeling",
    "box_labeling",
    "path_graph",
    "path_poly",
    "phi",
    "sub_staircase_monomials",
    "staircase_character",
    "check_triangularity",
    "check_dominance_triangularity",
    "phi_rank",
    "phi_is_isomorphism",
    "external_activity_basis",
]

_SOURCES = {
    "polynomial": {"Polynomial", "graph_weight"},
    "span": {
        "GradedSpan",
        "EchelonBasis",
        "enum_slim",
        "build_span",
        "hilbert_series",
        "degree_character",
        "rank_of",
    },
    "staircase": {
        "BoxLabeling",
        "box_labeling",
        "path_graph",
        "path_poly",
        "phi",
        "sub_staircase_monomials",
        "staircase_character",
        "check_triangularity",
        "check_dominance_triangularity",
    },
    "basis": {"phi_rank", "phi_is_isomorphism", "external_activity_basis"},
}


def __getattr__(name):
    for module, names in _SOURCES.items():
        if name in names:
            from importlib import import_module

            return getattr(import_module(f"{__name__}.{module}"), name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return __all__
