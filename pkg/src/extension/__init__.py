"""
Extension Module

Restriction matrices from S_N to S_n and the exhaustive searches that decide
whether a character of S_n is the restriction of an S_N-module, or of a sum
of coset modules.
"""

__all__ = [
    "RestrictionMatrix",
    "restriction_matrix",
    "coset_restriction_matrix",
    "FeasibilityResult",
    "ExtensionScan",
    "extends_to",
    "extends_as_coset_sum",
    "max_extension",
    "coset_decomposition",
    "irreducible_multiplicities",
    "near_rectangle",
    "near_rectangles",
]


def __getattr__(name):
    if name in {"RestrictionMatrix", "restriction_matrix", "coset_restriction_matrix"}:
        from . import restriction

        return getattr(restriction, name)
    elif name in {
        "FeasibilityResult",
        "ExtensionScan",
        "extends_to",
        "extends_as_coset_sum",
        "max_extension",
        "coset_decomposition",
        "irreducible_multiplicities",
    }:
        from . import feasibility

        return getattr(feasibility, name)
    elif name in {"near_rectangle", "near_rectangles"}:
        from . import shapes

        return getattr(shapes, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return __all__
