"""
Combinatorics Module

Partitions and their orders, (ell, m)-Dyck paths with their statistics,
parking functions, and the labeled-path bijection between the last two.
"""

__all__ = [
    "Partition",
    "DyckPath",
    "ParkingFunction",
    "mult_partition",
    "grevlex_less",
    "young_contains",
    "dominates",
    "enum_partitions",
    "enum_dyck_paths",
    "path_stats",
    "is_parking_function",
    "enum_parking_functions",
    "labeled_path_to_parking",
    "sub_staircase_partitions",
]


def __getattr__(name):
    if name in {
        "Partition",
        "mult_partition",
        "grevlex_less",
        "young_contains",
        "dominates",
        "enum_partitions",
        "sub_staircase_partitions",
    }:
        from . import partitions

        return getattr(partitions, name)
    elif name in {"DyckPath", "enum_dyck_paths", "path_stats"}:
        from . import dyck

        return getattr(dyck, name)
    elif name in {
        "ParkingFunction",
        "is_parking_function",
        "enum_parking_functions",
        "labeled_path_to_parking",
    }:
        from . import parking

        return getattr(parking, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return __all__
