"""
Characters Module

Exact character theory of the symmetric groups: class functions, the
Murnaghan-Nakayama rule, coset and Lie characters, and symmetric functions in
the Schur and complete homogeneous bases.
"""

__all__ = [
    "ClassFunction",
    "SymFunc",
    "GradedSymFunc",
    "irreducible_character",
    "coset_character",
    "inner_product",
    "frobenius",
    "convert",
    "restrict",
    "induction_product",
    "sym_power",
    "lie_character",
    "named_character",
    "park_grfrob",
    "park_character_direct",
]


def __getattr__(name):
    if name in {"SymFunc", "GradedSymFunc", "frobenius", "convert", "park_grfrob"}:
        from . import symfunc

        return getattr(symfunc, name)
    elif name in __all__:
        from . import class_functions

        return getattr(class_functions, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return __all__
