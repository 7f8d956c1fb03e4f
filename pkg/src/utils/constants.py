"""this module contains constants used in the rest of this library"""

from beartype.typing import Literal

Basis = Literal["s", "h"]
"""Symmetric function bases. `s` is the Schur basis, `h` the complete homogeneous basis."""

Group = Literal["S_n", "S_n+1"]
"""Which symmetric group acts on a span: the first n letters, or all n+1."""

NamedCharacter = Literal["trivial", "sign", "reflection", "regular"]

Suite = Literal[
    "main",
    "extremes",
    "triangularity",
    "tutte",
    "bijection",
    "extension",
    "properties",
    "all",
]

ExtensionMode = Literal["irreducible", "coset"]

CONFIG_DEFAULTS = {
    "max_n": 5,
    "max_N": 10,
    "max_extension_N": 11,
    "node_budget": 10**8,
    "max_subgraphs": 200_000,
    "max_colorings": 10**6,
    "threads": 1,
}
"""Default guards. Every one of them can be overridden per call."""

ENV_VARIABLES = {
    "max_n": "PARKEXT_MAX_N",
    "max_N": "PARKEXT_MAX_N_EXT",
    "max_extension_N": "PARKEXT_MAX_EXTENSION_N",
    "node_budget": "PARKEXT_NODE_BUDGET",
    "max_subgraphs": "PARKEXT_MAX_SUBGRAPHS",
    "max_colorings": "PARKEXT_MAX_COLORINGS",
    "threads": "PARKEXT_THREADS",
}

# guard on brute-force group enumeration (n! representatives are never built,
# but parking functions are enumerated explicitly)
MAX_DIRECT_PARK_N = 7

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
