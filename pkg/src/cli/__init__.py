"""The `parkext` command line.

```bash
parkext grfrob --n 3 --basis s
parkext grfrob --n 3 --ell 2 --m 2 --restricted --json out.json
parkext verify main --max-n 4
parkext extend --coset 3,2,2 --N 8 --expect infeasible
parkext config set node_budget 1000000
```

Exit status: 0 when every check passed, 1 when one failed, 2 for bad input
or an exceeded size guard, 3 when a search ran out of budget.
"""

import argparse
import sys
import time

from jsonschema import ValidationError
from termcolor import colored

from parkext import __version__
from parkext.cli.commands import cmd_config, cmd_extend, cmd_grfrob, cmd_tables, cmd_verify
from parkext.cli.report import write_report
from parkext.exceptions import (
    BudgetExhaustedError,
    GuardExceededError,
    InvalidInputError,
    ParkExtException,
)
from parkext.utils.constants import (
    CONFIG_DEFAULTS,
    EXIT_FAILED,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
)

__all__ = ["main", "build_parser"]

SUITE_NAMES = ["main", "extremes", "triangularity", "tutte", "bijection", "extension", "properties", "all"]
TARGET_KINDS = ["park", "coset", "irrep", "lie", "file"]


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", help="write the text report to this file")
    parser.add_argument("--json", dest="json_path", help="write the JSON record to this file")
    parser.add_argument("--timing", action="store_true", help="include wall time in the text report")
    parser.add_argument("--threads", type=int, help="workers for span builds and extension searches")
    parser.add_argument("--verbose", action="store_true", help="print progress to stderr")


def build_parser() -> argparse.ArgumentParser:
    """the argument parser for every subcommand"""
    parser = argparse.ArgumentParser(
        prog="parkext",
        description="Graded parking spaces, their characters and their extensions.",
    )
    parser.add_argument("--version", action="version", version=f"parkext {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    grfrob = sub.add_parser("grfrob", help="graded Frobenius characteristic of V_n^(ell,m)")
    grfrob.add_argument("--n", type=int, required=True)
    grfrob.add_argument("--ell", type=int, default=1)
    grfrob.add_argument("--m", type=int, default=1)
    grfrob.add_argument("--basis", choices=["s", "h"], default="s")
    grfrob.add_argument("--restricted", action="store_true", help="the S_n character instead of S_{n+1}")
    grfrob.add_argument("--from-paths", action="store_true", help="read the S_n side off Dyck paths")
    grfrob.add_argument("--max-n", type=int)
    grfrob.add_argument("--max-subgraphs", type=int)
    _add_output_flags(grfrob)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITE_NAMES, nargs="?", default="all")
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--max-N", dest="max_N", type=int)
    verify.add_argument("--node-budget", type=int)
    verify.add_argument("--stretch", action="store_true", help="also run the expensive cases")
    _add_output_flags(verify)

    extend = sub.add_parser("extend", help="decide whether a character extends to S_N")
    target = extend.add_mutually_exclusive_group(required=True)
    target.add_argument("--park", metavar="n", help="the parking character of S_n")
    target.add_argument("--coset", metavar="PARTITION", help="the coset character M^lambda, e.g. 3,2,2")
    target.add_argument("--irrep", metavar="PARTITION", help="the irreducible character chi^lambda")
    target.add_argument("--lie", metavar="n", help="Lie_n, a character of S_{n+1}")
    target.add_argument("--file", metavar="PATH", help='JSON file {"n": .., "basis": .., "terms": {..}}')
    extend.add_argument("--N", dest="N", type=int, required=True)
    extend.add_argument("--mode", choices=["irreducible", "coset"], default="irreducible")
    extend.add_argument("--expect", choices=["feasible", "infeasible"])
    extend.add_argument("--node-budget", type=int)
    extend.add_argument("--max-N", dest="max_N", type=int)
    _add_output_flags(extend)

    tables = sub.add_parser("tables", help="partitions and Dyck paths of size n")
    tables.add_argument("--n", type=int, required=True)
    tables.add_argument("--ell", type=int, default=1)
    tables.add_argument("--m", type=int, default=1)
    tables.add_argument("--output", help="write the text report to this file")
    tables.add_argument("--json", dest="json_path", help="write the JSON record to this file")

    config = sub.add_parser("config", help="show or change the size guards")
    config.add_argument("action", choices=["show", "set"])
    config.add_argument("key", nargs="?", choices=list(CONFIG_DEFAULTS))
    config.add_argument("value", nargs="?", type=int)
    return parser


def _run(args: argparse.Namespace):
    if args.command == "grfrob":
        return cmd_grfrob(
            args.n,
            args.ell,
            args.m,
            basis=args.basis,
            restricted=args.restricted,
            from_paths=args.from_paths,
            max_n=args.max_n,
            max_subgraphs=args.max_subgraphs,
            threads=args.threads,
            verbose=args.verbose,
        )
    if args.command == "verify":
        return cmd_verify(
            args.suite,
            max_n=args.max_n,
            max_N=args.max_N,
            node_budget=args.node_budget,
            threads=args.threads,
            stretch=args.stretch,
            verbose=args.verbose,
        )
    if args.command == "extend":
        kind = next(k for k in TARGET_KINDS if getattr(args, k) is not None)
        return cmd_extend(
            kind,
            getattr(args, kind),
            args.N,
            mode=args.mode,
            expect=args.expect,
            node_budget=args.node_budget,
            max_N=args.max_N,
            threads=args.threads,
            verbose=args.verbose,
        )
    return cmd_tables(args.n, args.ell, args.m)


def _fail(error: ParkExtException) -> int:
    color = {"danger": "red", "warning": "yellow"}.get(error.level, "cyan")
    print(colored(error.render(), color), file=sys.stderr)
    if isinstance(error, (InvalidInputError, GuardExceededError)):
        return EXIT_USAGE
    if isinstance(error, BudgetExhaustedError):
        return EXIT_INCONCLUSIVE
    return EXIT_FAILED


def main(argv: list[str] | None = None) -> int:
    """Parse `argv`, run the subcommand, print the report and return the exit status."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "config":
            cmd_config(args.action, args.key, args.value)
            return EXIT_OK
        start = time.perf_counter()
        report = _run(args)
        report.elapsed = time.perf_counter() - start
        text = write_report(
            report,
            output=args.output,
            json_path=args.json_path,
            timing=getattr(args, "timing", False),
        )
    except ParkExtException as error:
        return _fail(error)
    except ValueError as error:
        # bad config keys and unparsable values
        print(colored(str(error), "red"), file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as error:
        print(colored(f"report does not match its schema: {error.message}", "red"), file=sys.stderr)
        return EXIT_FAILED
    print(text, end="")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
