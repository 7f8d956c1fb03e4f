"""Does a character of S_n extend to S_N?

A character chi of S_n with irreducible multiplicities m extends to a
genuine S_N-module exactly when B^T x = m has a solution x in nonnegative
integers, B the restriction matrix. The same question in the coset basis
asks whether chi is the restriction of a direct sum of coset modules.

Both are decided by an exhaustive depth-first search, so an infeasible
verdict is a proof. Variables are visited by decreasing dimension of their
module, ties broken by grevlex; each variable is bounded by the residual it
may not overshoot, and a state whose residual has a positive entry no later
variable can reach is abandoned. Failed states are memoised.

With several threads the values of the first variable are searched side by
side. The branches share one node budget and one table of failed states,
and a branch stops once an earlier branch has a solution. The witness is
the one a serial run finds, and the budget caps all branches together.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
import threading

from beartype import beartype

from parkext.characters.class_functions import (
    ClassFunction,
    character_table,
    dimension,
    inner_product,
)
from parkext.characters.symfunc import convert, frobenius
from parkext.combinatorics.partitions import Partition, enum_partitions, grevlex_key
from parkext.config import resolve
from parkext.exceptions import (
    BudgetExhaustedError,
    GuardExceededError,
    InvalidInputError,
    NotACharacterError,
)
from parkext.extension.restriction import (
    RestrictionMatrix,
    coset_restriction_matrix,
    restriction_matrix,
)
from parkext.functions.parallel import run_func_in_parallel
from parkext.utils.core import progress, status

__all__ = [
    "FeasibilityResult",
    "ExtensionScan",
    "irreducible_multiplicities",
    "coset_decomposition",
    "extends_to",
    "extends_as_coset_sum",
    "max_extension",
    "witness_dimension",
]


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of one extension search.

    Attributes:
        feasible: a nonnegative integer solution exists
        witness: the solution, lam -> multiplicity (zeros dropped), when feasible
        nodes_explored: search nodes visited
        N: target group size
        mode: "irreducible" or "coset"
    """

    feasible: bool
    witness: Mapping[Partition, int] | None
    nodes_explored: int
    N: int
    mode: str = "irreducible"

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"


@dataclass(frozen=True)
class ExtensionScan:
    """Verdicts of `max_extension` for N = n+1, n+2, ...

    Attributes:
        n: size of the group the character lives on
        largest: largest N reached with every step feasible (n if none)
        verdicts: N -> "feasible" | "infeasible" | "inconclusive"
        results: N -> FeasibilityResult, for the decided N
    """

    n: int
    largest: int
    verdicts: Mapping[int, str] = field(default_factory=dict)
    results: Mapping[int, FeasibilityResult] = field(default_factory=dict)


def _module_dimension(lam: Partition, mode: str) -> int:
    if mode == "coset":
        return factorial(lam.size) // prod(factorial(p) for p in lam)
    return int(dimension(character_table(lam.size)[lam]))


def _variable_order(N: int, mode: str) -> list[Partition]:
    """decreasing module dimension, ties by grevlex (largest first)"""
    return sorted(
        enum_partitions(N),
        key=lambda lam: (_module_dimension(lam, mode), grevlex_key(lam.padded(N))),
        reverse=True,
    )


class _Cancelled(Exception):
    """an earlier first-level branch already found a solution"""


class _Ledger:
    """Node count, failed states and the stop signal shared by every branch of one search."""

    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0
        self.failed: set[tuple] = set()
        self.solved_branch: int | None = None
        self._lock = threading.Lock()

    def visit(self, branch: int) -> None:
        with self._lock:
            if self.solved_branch is not None and self.solved_branch < branch:
                raise _Cancelled
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhaustedError(
                    f"no verdict after {self.budget} search nodes", nodes_explored=self.budget
                )

    def solved(self, branch: int) -> None:
        with self._lock:
            if self.solved_branch is None or branch < self.solved_branch:
                self.solved_branch = branch


class _Search:
    """Depth-first search for x >= 0 with sum_i x_i * rows[i] == target."""

    def __init__(
        self,
        variables: Sequence[Partition],
        rows: Sequence[Mapping[Partition, int]],
        target: Mapping[Partition, int],
        ledger: _Ledger,
        branch: int = 0,
    ):
        self.variables = list(variables)
        self.rows = [dict(row) for row in rows]
        self.keys = sorted(target, key=grevlex_key)
        self.residual = dict(target)
        self.ledger = ledger
        self.branch = branch
        self.values: list[int] = [0] * len(self.variables)
        # reach[i]: the mu some variable at index >= i can still lower
        reach: list[frozenset] = [frozenset()] * (len(self.rows) + 1)
        for i in range(len(self.rows) - 1, -1, -1):
            reach[i] = reach[i + 1] | frozenset(self.rows[i])
        self.reach = reach

    def _state(self, i: int) -> tuple:
        return (i,) + tuple(self.residual[mu] for mu in self.keys)

    def upper_bound(self, i: int) -> int:
        row = self.rows[i]
        if not row:
            return 0
        return min(self.residual.get(mu, 0) // b for mu, b in row.items())

    def assign(self, i: int, amount: int) -> None:
        for mu, b in self.rows[i].items():
            self.residual[mu] -= amount * b
        self.values[i] += amount

    def run(self, i: int = 0) -> bool:
        self.ledger.visit(self.branch)
        if not any(self.residual.values()):
            return True
        if i == len(self.rows):
            return False
        if any(r > 0 and mu not in self.reach[i] for mu, r in self.residual.items()):
            return False
        state = self._state(i)
        if state in self.ledger.failed:
            return False
        for x in range(self.upper_bound(i), -1, -1):
            self.assign(i, x)
            if self.run(i + 1):
                return True
            self.assign(i, -x)
        self.ledger.failed.add(state)
        return False

    def witness(self) -> dict[Partition, int]:
        return {lam: x for lam, x in zip(self.variables, self.values) if x}


def _solve_branch(
    variables: list[Partition],
    rows: list[dict],
    target: dict,
    first_value: int,
    branch: int,
    ledger: _Ledger,
) -> tuple[str, dict | None]:
    """search below the root with the first variable pinned to `first_value`"""
    search = _Search(variables, rows, target, ledger, branch=branch)
    search.assign(0, first_value)
    try:
        found = search.run(1)
    except BudgetExhaustedError:
        return "inconclusive", None
    except _Cancelled:
        return "cancelled", None
    if found:
        ledger.solved(branch)
        return "feasible", search.witness()
    return "infeasible", None


def _solve(
    matrix: RestrictionMatrix,
    target: Mapping[Partition, int],
    *,
    mode: str,
    budget: int,
    threads: int,
    verbose: bool,
) -> FeasibilityResult:
    variables = _variable_order(matrix.N, mode)
    rows = [matrix.row(lam) for lam in variables]
    target = {mu: int(target.get(mu, 0)) for mu in enum_partitions(matrix.n)}
    ledger = _Ledger(budget)

    if threads <= 1 or not any(target.values()):
        search = _Search(variables, rows, target, ledger)
        found = search.run()
        witness = search.witness() if found else None
    else:
        # the root is visited here; each value of the first variable is one
        # branch, all of them drawing on the same node budget and failed states
        ledger.visit(0)
        first = _Search(variables, rows, target, ledger).upper_bound(0)
        args = [
            {
                "variables": variables,
                "rows": rows,
                "target": target,
                "first_value": x,
                "branch": branch,
                "ledger": ledger,
            }
            for branch, x in enumerate(range(first, -1, -1))
        ]
        outcome = run_func_in_parallel(
            func=_solve_branch,
            args=args,
            batch_size=len(args),
            max_workers=threads,
            executor="thread",
        )
        found, witness = False, None
        # branches are read in serial order: a solution counts only once
        # every branch before it was decided
        for verdict, branch_witness in progress(
            outcome["results"], enabled=verbose, desc="first-level branches"
        ):
            if verdict == "inconclusive":
                raise BudgetExhaustedError(
                    f"no verdict after {budget} search nodes", nodes_explored=budget
                )
            if verdict == "feasible":
                found, witness = True, branch_witness
                break
    nodes = ledger.nodes

    if found and matrix.apply(witness) != {mu: c for mu, c in target.items() if c}:
        raise AssertionError(f"witness {witness} does not restrict to the target")
    status(
        f"S_{matrix.n} -> S_{matrix.N} ({mode}): {'feasible' if found else 'infeasible'} "
        f"after {nodes} nodes",
        level="success" if found else "warning",
        quiet=not verbose,
    )
    return FeasibilityResult(
        feasible=found, witness=witness, nodes_explored=nodes, N=matrix.N, mode=mode
    )


@beartype
def irreducible_multiplicities(chi: ClassFunction) -> dict[Partition, int]:
    """<chi, chi^mu> for every mu |- n.

    Raises:
        NotACharacterError: a multiplicity is negative or not an integer
    """
    found = {}
    for mu, irreducible in character_table(chi.n).items():
        value = inner_product(chi, irreducible)
        if value.denominator != 1 or value < 0:
            raise NotACharacterError(
                f"multiplicity of chi^{mu} is {value}",
                fix="pass the character of a genuine module",
            )
        found[mu] = int(value)
    return found


@beartype
def coset_decomposition(chi: ClassFunction) -> dict[Partition, int]:
    """Coordinates of chi in the coset characters M^lam (zeros dropped).

    They may be negative; they are integers for every virtual character.

    Raises:
        NotACharacterError: the coordinates are not integers
    """
    return {lam: int(c) for lam, c in convert(frobenius(chi), "h").coeffs.items()}


def _check_target(n: int, N: int, max_N: int | None) -> None:
    if N < n:
        raise InvalidInputError(f"cannot extend a character of S_{n} to S_{N}")
    limit = resolve("max_N", max_N)
    if N > limit:
        raise GuardExceededError(f"N={N} exceeds max_N={limit}", guard="max_N")


@beartype
def extends_to(
    chi: ClassFunction,
    N: int,
    *,
    node_budget: int | None = None,
    max_N: int | None = None,
    threads: int | None = None,
    verbose: bool = False,
) -> FeasibilityResult:
    """Decide whether chi is the restriction of an S_N-module.

    Args:
        chi: a character of S_n
        N: size of the larger group, N >= n
        node_budget: search node limit
        max_N: guard on N
        threads: workers for the first search level
        verbose: print the verdict line

    Returns:
        FeasibilityResult whose witness lists the irreducibles of S_N

    Raises:
        NotACharacterError: chi has a negative or fractional multiplicity
        GuardExceededError: N is above the guard
        BudgetExhaustedError: the node budget ran out before a verdict
    """
    _check_target(chi.n, N, max_N)
    target = irreducible_multiplicities(chi)
    matrix = restriction_matrix(N, chi.n, max_N=N)
    return _solve(
        matrix,
        target,
        mode="irreducible",
        budget=resolve("node_budget", node_budget),
        threads=resolve("threads", threads),
        verbose=verbose,
    )


@beartype
def extends_as_coset_sum(
    target: ClassFunction | Mapping[Partition, int] | Mapping[tuple, int],
    N: int,
    *,
    n: int | None = None,
    node_budget: int | None = None,
    max_N: int | None = None,
    threads: int | None = None,
    verbose: bool = False,
) -> FeasibilityResult:
    """Decide whether a character is the restriction of a sum of coset modules of S_N.

    Args:
        target: a character of S_n, or its coordinates lam -> c_lam in the
            coset basis
        N: size of the larger group
        n: size of the smaller group; required only when `target` is an
            empty mapping

    Returns:
        FeasibilityResult whose witness lists the coset modules M^lam of S_N.
        A target with a negative coset coordinate is infeasible at once.
    """
    if isinstance(target, ClassFunction):
        n = target.n
        coordinates = coset_decomposition(target)
    else:
        coordinates = {Partition.from_unsorted(lam): int(c) for lam, c in target.items()}
        sizes = {lam.size for lam in coordinates}
        if n is None:
            if len(sizes) != 1:
                raise InvalidInputError(f"cannot infer n from partitions of sizes {sorted(sizes)}")
            n = sizes.pop()
        elif sizes - {n}:
            raise InvalidInputError(f"coset coordinates must be keyed by partitions of {n}")
    _check_target(n, N, max_N)
    if any(c < 0 for c in coordinates.values()):
        return FeasibilityResult(feasible=False, witness=None, nodes_explored=0, N=N, mode="coset")
    matrix = coset_restriction_matrix(N, n, max_N=N)
    return _solve(
        matrix,
        coordinates,
        mode="coset",
        budget=resolve("node_budget", node_budget),
        threads=resolve("threads", threads),
        verbose=verbose,
    )


@beartype
def max_extension(
    chi: ClassFunction,
    N_max: int,
    *,
    node_budget: int | None = None,
    threads: int | None = None,
    verbose: bool = False,
) -> ExtensionScan:
    """Largest N <= N_max such that chi extends to S_N.

    An extension to S_N restricts to every S_N' in between, so the scan
    walks up from n + 1 and stops at the first infeasible or inconclusive
    verdict.
    """
    n = chi.n
    largest = n
    verdicts: dict[int, str] = {}
    results: dict[int, FeasibilityResult] = {}
    for N in range(n + 1, N_max + 1):
        try:
            result = extends_to(
                chi, N, node_budget=node_budget, max_N=N_max, threads=threads, verbose=verbose
            )
        except BudgetExhaustedError:
            verdicts[N] = "inconclusive"
            break
        verdicts[N] = result.verdict
        results[N] = result
        if not result.feasible:
            break
        largest = N
    return ExtensionScan(n=n, largest=largest, verdicts=verdicts, results=results)


def witness_dimension(result: FeasibilityResult) -> Fraction:
    """dimension of the S_N-module named by a feasible witness"""
    if not result.feasible:
        raise InvalidInputError("an infeasible result has no witness")
    return Fraction(
        sum(count * _module_dimension(lam, result.mode) for lam, count in result.witness.items())
    )
