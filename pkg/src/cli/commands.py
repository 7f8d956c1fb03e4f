"""Entry points behind the `grfrob`, `extend`, `verify`, `tables` and `config` subcommands."""

import json
from pathlib import Path

from beartype import beartype
from beartype.typing import Literal

from parkext.characters.class_functions import (
    ClassFunction,
    coset_character,
    irreducible_character,
    lie_character,
)
from parkext.characters.symfunc import (
    GradedSymFunc,
    SymFunc,
    character_of,
    convert,
    graded_frobenius,
    park_grfrob,
)
from parkext.cli.report import Report
from parkext.combinatorics.dyck import dyck_path_steps, enum_dyck_paths
from parkext.combinatorics.partitions import (
    enum_partitions,
    mult_partition,
    parse_partition,
    sub_staircase_partitions,
)
from parkext.cli.verify import SuiteOptions, run_suite
from parkext.config import get_value, resolve, set_value
from parkext.exceptions import BudgetExhaustedError, InvalidInputError
from parkext.extension.feasibility import (
    extends_as_coset_sum,
    extends_to,
    irreducible_multiplicities,
    witness_dimension,
)
from parkext.polyengine.span import build_span, degree_character
from parkext.utils.constants import Basis, ExtensionMode, Suite
from parkext.utils.core import _print_dict

__all__ = ["cmd_grfrob", "cmd_extend", "cmd_verify", "cmd_tables", "cmd_config", "load_target"]

TargetKind = Literal["park", "coset", "irrep", "lie", "file"]


def _in_basis(graded: GradedSymFunc, basis: Basis) -> GradedSymFunc:
    if graded.basis == basis:
        return graded
    return GradedSymFunc(graded.n, basis, tuple(convert(piece, basis) for piece in graded.degrees))


@beartype
def cmd_grfrob(
    n: int,
    ell: int = 1,
    m: int = 1,
    *,
    basis: Basis = "s",
    restricted: bool = False,
    from_paths: bool = False,
    max_n: int | None = None,
    max_subgraphs: int | None = None,
    threads: int | None = None,
    verbose: bool = False,
) -> Report:
    """Graded Frobenius characteristic of V_n^{(ell, m)}.

    Without `restricted` the S_{n+1} action is used, which needs ell == m.
    With `from_paths` the restricted side is read off the Dyck-path sum
    instead of the span.

    Raises:
        InvalidInputError: the S_{n+1} side was asked for with ell != m, or
            together with `from_paths`
    """
    if not restricted and ell != m:
        raise InvalidInputError(
            f"S_{n + 1} does not act on V_{n}^({ell},{m})",
            fix="pass --restricted for the S_n character",
        )
    if from_paths and not restricted:
        raise InvalidInputError(
            "the Dyck-path sum describes the S_n character only",
            fix="pass --restricted together with --from-paths",
        )
    report = Report(
        command="grfrob",
        parameters={
            "n": n,
            "ell": ell,
            "m": m,
            "basis": basis,
            "group": f"S_{n}" if restricted else f"S_{n + 1}",
            "source": "paths" if from_paths else "span",
        },
    )
    paths = park_grfrob(n, ell, m)
    if from_paths:
        graded = paths
        hilbert = [int(d) for d in paths.hilbert_series()]
    else:
        span = build_span(
            n, ell, m, max_n=max_n, max_subgraphs=max_subgraphs, threads=threads, verbose=verbose
        )
        hilbert = span.hilbert()
        group = "S_n" if restricted else "S_n+1"
        pieces = [
            degree_character(span, k, group, threads=threads) for k in range(len(hilbert))
        ]
        graded = graded_frobenius(pieces)
        if restricted:
            report.add(
                "S_n character equals the Dyck-path sum",
                _in_basis(graded, "h") == paths,
            )
    graded = _in_basis(graded, basis)
    report.graded = graded
    expected = ell * (m * n + ell) ** (n - 1)
    report.add("dimension", sum(hilbert) == expected, sum(hilbert))
    report.tables["hilbert"] = (["degree", "dimension"], [[k, d] for k, d in enumerate(hilbert)])
    report.tables["terms"] = (
        ["degree", "partition", "coefficient"],
        [[k, str(lam), c] for k, lam, c in graded.terms()],
    )
    return report


@beartype
def load_target(kind: TargetKind, value: str) -> ClassFunction:
    """Build the character to extend.

    Args:
        kind: "park" (value n), "lie" (value n, a character of S_{n+1}),
            "coset" or "irrep" (value a partition such as "3,2,2"), or
            "file" (value a path to a JSON file with keys n, basis, terms)

    Raises:
        InvalidInputError: the value cannot be parsed
    """
    if kind in ("park", "lie"):
        try:
            n = int(value)
        except ValueError as error:
            raise InvalidInputError(f"{kind} expects an integer, got {value!r}") from error
        if kind == "lie":
            return lie_character(n)
        return character_of(park_grfrob(n).at_q_equals_one())
    if kind == "coset":
        return coset_character(parse_partition(value))
    if kind == "irrep":
        return irreducible_character(parse_partition(value))
    with open(Path(value), "r") as file:
        data = json.load(file)
    try:
        terms = {parse_partition(key): c for key, c in data["terms"].items()}
        return character_of(SymFunc(int(data["n"]), data.get("basis", "s"), terms))
    except KeyError as error:
        raise InvalidInputError(
            f"{value} has no {error} entry",
            fix='write {"n": 3, "basis": "s", "terms": {"2,1": 1}}',
        ) from error


@beartype
def cmd_extend(
    kind: TargetKind,
    value: str,
    N: int,
    *,
    mode: ExtensionMode = "irreducible",
    expect: Literal["feasible", "infeasible"] | None = None,
    node_budget: int | None = None,
    max_N: int | None = None,
    threads: int | None = None,
    verbose: bool = False,
) -> Report:
    """Decide whether a character extends to S_N; a spent node budget makes
    the report inconclusive rather than failed."""
    chi = load_target(kind, value)
    report = Report(
        command="extend",
        parameters={"target": f"{kind} {value}", "n": chi.n, "N": N, "mode": mode},
    )
    try:
        if mode == "coset":
            result = extends_as_coset_sum(
                chi, N, node_budget=node_budget, max_N=max_N, threads=threads, verbose=verbose
            )
        else:
            report.tables["target"] = (
                ["partition", "multiplicity"],
                [[str(mu), c] for mu, c in irreducible_multiplicities(chi).items() if c],
            )
            result = extends_to(
                chi, N, node_budget=node_budget, max_N=max_N, threads=threads, verbose=verbose
            )
    except BudgetExhaustedError as error:
        report.inconclusive = True
        report.add(f"extends to S_{N}", None, "inconclusive")
        report.add("nodes explored", None, error.nodes_explored)
        return report

    passed = None if expect is None else result.verdict == expect
    report.add(f"extends to S_{N}", passed, result.verdict)
    report.add("nodes explored", None, result.nodes_explored)
    if result.feasible:
        report.add("witness dimension", None, witness_dimension(result))
        report.tables["witness"] = (
            ["partition", "multiplicity"],
            [[str(lam), c] for lam, c in sorted(result.witness.items())],
        )
    return report


@beartype
def cmd_tables(n: int, ell: int = 1, m: int = 1) -> Report:
    """partitions of n, the (ell, m)-Dyck paths with their statistics, and the sub-staircase partitions"""
    report = Report(command="tables", parameters={"n": n, "ell": ell, "m": m})
    report.tables["partitions"] = (
        ["partition", "mult"],
        [[str(lam), str(mult_partition(lam.padded(n)))] for lam in enum_partitions(n)],
    )
    paths = enum_dyck_paths(n, ell, m)
    report.tables["dyck paths"] = (
        ["mu(D)", "lambda(D)", "area", "steps"],
        [[str(p.mu), str(p.lam), p.area, dyck_path_steps(p)] for p in paths],
    )
    report.tables["sub-staircase partitions"] = (
        ["partition"],
        [[str(lam)] for lam in sub_staircase_partitions(n, ell, m)],
    )
    report.add("number of Dyck paths", None, len(paths))
    return report


def cmd_config(action: str, key: str | None = None, value: int | str | None = None) -> None:
    """show the configuration as a table, or set one key"""
    if action == "set":
        if key is None or value is None:
            raise InvalidInputError("config set needs a key and a value")
        set_value(key, value)
        return
    _print_dict(get_value(), json=False, key_label="Setting")


@beartype
def cmd_verify(
    suite: Suite = "all",
    *,
    max_n: int | None = None,
    max_N: int | None = None,
    node_budget: int | None = None,
    threads: int | None = None,
    stretch: bool = False,
    verbose: bool = False,
) -> Report:
    """Run one verification suite, or all of them.

    Args:
        suite: suite name, or "all"
        max_n: largest n for the per-n sweeps; defaults to the `max_n` setting
        max_N: guard on extension targets
        stretch: also run the expensive cases, (4,2,2) and the Park_5 searches

    Returns:
        Report whose verdicts are the suite's checks
    """
    options = SuiteOptions(
        max_n=resolve("max_n", max_n),
        max_N=resolve("max_N", max_N),
        node_budget=node_budget,
        threads=threads,
        stretch=stretch,
        verbose=verbose,
    )
    report = Report(
        command="verify",
        parameters={"suite": suite, "max_n": options.max_n, "stretch": stretch},
    )
    report.extend(run_suite(suite, options))
    # a failed check outranks an undecided search
    report.inconclusive = report.passed and any(
        v.passed is None and "inconclusive" in v.value for v in report.verdicts
    )
    return report
