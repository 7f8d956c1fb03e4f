"""Slim-subgraph spans and the traces of permutations on their graded pieces.

The span V_n^{(ell, m)} is spanned by p(G) for the slim subgraphs G of
K_{n+1}^{(ell, m)}. All of its elements are invariant under translating
every variable by the same amount, so setting x_{n+1} = 0 is injective on
it. Bases are therefore stored in that chart, as polynomials in
x_1..x_n; `GradedSpan.lifted_basis` recovers the polynomials in n + 1
variables.

Each graded piece is kept in fully reduced row echelon form over the
integers: every row is primitive, its pivot is its leading monomial, and no
row has a nonzero entry at another row's pivot.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, gcd, prod

from beartype import beartype
from beartype.typing import Literal

from parkext.characters.class_functions import ClassFunction, class_representative
from parkext.combinatorics.partitions import enum_partitions, grevlex_key
from parkext.config import resolve
from parkext.exceptions import GuardExceededError, InvalidInputError, NonInvariantSubspaceError
from parkext.functions.parallel import run_func_in_parallel
from parkext.graphs.multigraph import Multigraph, complete_multigraph, is_connected
from parkext.polyengine.polynomial import Monomial, Polynomial, times_difference
from parkext.utils.constants import Group
from parkext.utils.core import progress, status

__all__ = [
    "EchelonBasis",
    "GradedSpan",
    "enum_slim",
    "build_span",
    "degree_character",
    "hilbert_series",
    "rank_of",
    "lift",
]

PivotOrder = Literal["grevlex", "lex"]

_PIVOT_KEYS: dict[str, Callable] = {
    "grevlex": grevlex_key,
    "lex": lambda mon: mon,
}


def _primitive(vector: dict, key: Callable) -> dict:
    """divide out the content and make the leading coefficient positive"""
    if not vector:
        return vector
    g = 0
    for c in vector.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = vector[max(vector, key=key)]
    if lead < 0:
        g = -g
    if g != 1:
        vector = {mon: c // g for mon, c in vector.items()}
    return vector


class EchelonBasis:
    """Fully reduced integer row echelon form of a growing set of vectors.

    Vectors are dicts from monomials to integers. The pivot of a row is its
    largest monomial under `pivot_order`; reducing a vector touches only the
    rows whose pivots it contains.

    Args:
        ceiling: dimension of the ambient space, if known. Once reached,
            every further vector is dependent and `insert` skips the work.
        pivot_order: "grevlex" or "lex"
    """

    def __init__(self, ceiling: int | None = None, pivot_order: PivotOrder = "grevlex"):
        self.rows: list[dict[Monomial, int]] = []
        self.pivots: list[Monomial] = []
        self._pivot_row: dict[Monomial, int] = {}
        self.ceiling = ceiling
        self.pivot_order = pivot_order
        self._key = _PIVOT_KEYS[pivot_order]

    @classmethod
    def from_rows(
        cls, rows: Sequence[Mapping[Monomial, int]], pivot_order: PivotOrder = "grevlex"
    ) -> "EchelonBasis":
        """wrap rows that are already fully reduced"""
        basis = cls(pivot_order=pivot_order)
        for row in rows:
            pivot = max(row, key=basis._key)
            basis._pivot_row[pivot] = len(basis.rows)
            basis.rows.append(dict(row))
            basis.pivots.append(pivot)
        return basis

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return self.ceiling is not None and len(self.rows) >= self.ceiling

    def reduce(self, vector: Mapping[Monomial, int]) -> dict[Monomial, int]:
        """the primitive remainder of `vector` after eliminating every pivot"""
        v = dict(vector)
        for pivot in [mon for mon in v if mon in self._pivot_row]:
            row = self.rows[self._pivot_row[pivot]]
            a, c = v[pivot], row[pivot]
            g = gcd(a, c)
            scale, factor = c // g, a // g
            if scale != 1:
                for mon in v:
                    v[mon] *= scale
            for mon, r in row.items():
                value = v.get(mon, 0) - factor * r
                if value:
                    v[mon] = value
                else:
                    v.pop(mon, None)
        return _primitive(v, self._key)

    def insert(self, vector: Mapping[Monomial, int]) -> bool:
        """add `vector` to the span; True if the dimension grew"""
        if self.full or not vector:
            return False
        new = self.reduce(vector)
        if not new:
            return False
        pivot = max(new, key=self._key)
        c = new[pivot]
        for index, row in enumerate(self.rows):
            a = row.get(pivot)
            if not a:
                continue
            g = gcd(a, c)
            scale, factor = c // g, a // g
            updated = {mon: scale * r for mon, r in row.items()}
            for mon, value in new.items():
                entry = updated.get(mon, 0) - factor * value
                if entry:
                    updated[mon] = entry
                else:
                    updated.pop(mon, None)
            self.rows[index] = _primitive(updated, self._key)
        self._pivot_row[pivot] = len(self.rows)
        self.rows.append(new)
        self.pivots.append(pivot)
        return True


@beartype
def rank_of(polynomials: Sequence[Polynomial]) -> int:
    """exact rank of a list of integer polynomials"""
    basis = EchelonBasis()
    for p in polynomials:
        if any(not isinstance(c, int) for c in p.terms.values()):
            raise InvalidInputError("rank_of works on integer polynomials")
        basis.insert(p.terms)
    return len(basis)


@dataclass(frozen=True)
class GradedSpan:
    """Per-degree echelon bases of V_n^{(ell, m)}, in the chart x_{n+1} = 0.

    Attributes:
        n: number of variables in the chart (the span lives in n + 1 variables)
        ell: multiplicity of the edges to vertex n + 1
        m: multiplicity of the other edges
        rows: degree -> echelon rows (exponent vectors of length n)
        pivots: degree -> pivot monomial of each row
        num_slim: number of slim subgraphs that were expanded
        pivot_order: monomial order used to choose pivots
    """

    n: int
    ell: int
    m: int
    rows: Mapping[int, tuple[dict, ...]]
    pivots: Mapping[int, tuple[Monomial, ...]]
    num_slim: int = 0
    pivot_order: str = "grevlex"
    degrees: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.rows)))

    def hilbert(self) -> list[int]:
        top = max(self.degrees, default=-1)
        return [len(self.rows.get(k, ())) for k in range(top + 1)]

    @property
    def dimension(self) -> int:
        return sum(self.hilbert())

    def basis(self, k: int) -> list[Polynomial]:
        """degree-k basis in the chart x_{n+1} = 0"""
        return [Polynomial(self.n, row) for row in self.rows.get(k, ())]

    def lifted_basis(self, k: int) -> list[Polynomial]:
        """degree-k basis as polynomials in x_1..x_{n+1}"""
        return [lift(p) for p in self.basis(k)]


@beartype
def lift(p: Polynomial) -> Polynomial:
    """Undo x_{n+1} = 0 on a translation-invariant polynomial:
    substitute x_i -> x_i - x_{n+1}."""
    n = p.nvars
    lifted: dict[Monomial, int | Fraction] = {}
    for mon, c in p.terms.items():
        for split in product(*(range(e + 1) for e in mon)):
            coefficient = c
            for e, t in zip(mon, split):
                coefficient *= comb(e, t) * (-1) ** (e - t)
            key = tuple(split) + (sum(mon) - sum(split),)
            lifted[key] = lifted.get(key, 0) + coefficient
    return Polynomial(n + 1, lifted)


def _edge_targets(graph: Multigraph, last: int) -> list[tuple[int, int | None]]:
    """0-based variable pair of each edge in the chart x_last = 0"""
    return [(i - 1, None if j == last else j - 1) for i, j in graph.edge_list()]


class _SlimWalk:
    """Depth-first walk over slim sub-multigraphs.

    A multiplicity vector is visited once: children increase the count of
    an edge at or after the last one increased. Slimness is inherited by
    subgraphs, so a non-slim vector prunes its whole subtree.
    """

    def __init__(self, graph: Multigraph, visit: Callable, with_polynomials: bool):
        self.graph = graph
        self.edges = graph.edge_list()
        self.caps = graph.multiplicities()
        self.targets = _edge_targets(graph, graph.num_vertices)
        self.visit = visit
        self.with_polynomials = with_polynomials
        self.count = 0

    def _complement_connected(self, vector: list[int]) -> bool:
        return is_connected(
            self.graph.num_vertices,
            (e for e, g, cap in zip(self.edges, vector, self.caps) if g < cap),
        )

    def run(self, vector: list[int], first: int, terms) -> None:
        self.count += 1
        self.visit(tuple(vector), terms)
        for e in range(first, len(self.caps)):
            if vector[e] == self.caps[e]:
                continue
            vector[e] += 1
            if vector[e] < self.caps[e] or self._complement_connected(vector):
                child = None
                if self.with_polynomials:
                    child = times_difference(terms, *self.targets[e])
                self.run(vector, e, child)
            vector[e] -= 1

    def branches(self) -> list[int]:
        """edges whose single copy is slim: the first level of the walk"""
        found = []
        zero = [0] * len(self.caps)
        for e in range(len(self.caps)):
            zero[e] = 1
            if self.caps[e] > 1 or self._complement_connected(zero):
                found.append(e)
            zero[e] = 0
        return found


def _check_subgraph_guard(graph: Multigraph, n: int, ell: int, m: int, max_n, max_subgraphs) -> None:
    if ell == m == 1:
        limit = resolve("max_n", max_n)
        if n > limit:
            raise GuardExceededError(f"n={n} exceeds max_n={limit}", guard="max_n")
    bound = prod(c + 1 for c in graph.multiplicities())
    limit = resolve("max_subgraphs", max_subgraphs)
    if bound > limit:
        raise GuardExceededError(
            f"K_{n + 1}^({ell},{m}) has up to {bound} sub-multigraphs, more than {limit}",
            guard="max_subgraphs",
        )


@beartype
def enum_slim(
    n: int,
    ell: int = 1,
    m: int = 1,
    *,
    max_subgraphs: int | None = None,
) -> list[Multigraph]:
    """All slim sub-multigraphs of K_{n+1}^{(ell, m)}, in depth-first order.

    A sub-multigraph is slim when removing it leaves a connected graph.
    """
    graph = complete_multigraph(n, ell, m)
    _check_subgraph_guard(graph, n, ell, m, max_n=10**9, max_subgraphs=max_subgraphs)
    found: list[tuple[int, ...]] = []
    walk = _SlimWalk(graph, lambda vector, _: found.append(vector), with_polynomials=False)
    walk.run([0] * len(walk.caps), 0, None)
    return [graph.submultigraph(vector) for vector in found]


def _ceiling(n: int, k: int) -> int:
    """number of degree-k monomials in n variables"""
    return comb(n + k - 1, k)


def _reduce_branch(
    n: int, ell: int, m: int, first: int | None, pivot_order: str
) -> tuple[dict[int, list[dict]], int]:
    """Expand and reduce one first-level subtree of the slim walk.

    `first=None` handles only the empty subgraph.
    """
    graph = complete_multigraph(n, ell, m)
    bases: dict[int, EchelonBasis] = {}

    def visit(vector: tuple[int, ...], terms: dict) -> None:
        k = sum(vector)
        if k not in bases:
            bases[k] = EchelonBasis(ceiling=_ceiling(n, k), pivot_order=pivot_order)
        bases[k].insert(terms)

    walk = _SlimWalk(graph, visit, with_polynomials=True)
    one = {(0,) * n: 1}
    if first is None:
        visit((0,) * len(walk.caps), one)
        return {0: bases[0].rows}, 1
    vector = [0] * len(walk.caps)
    vector[first] = 1
    walk.run(vector, first, times_difference(one, *walk.targets[first]))
    return {k: b.rows for k, b in bases.items()}, walk.count


@beartype
def build_span(
    n: int,
    ell: int = 1,
    m: int = 1,
    *,
    max_n: int | None = None,
    max_subgraphs: int | None = None,
    threads: int | None = None,
    pivot_order: PivotOrder = "grevlex",
    verbose: bool = False,
) -> GradedSpan:
    """Build the graded echelon bases of V_n^{(ell, m)}.

    Every slim subgraph polynomial is expanded along a depth-first walk that
    shares partial products, and reduced into the echelon basis of its
    degree. With `threads > 1` the first-level subtrees are reduced in
    separate processes and their bases merged; fully reduced echelon form
    is unique, so the result does not depend on the worker count.

    Args:
        n: size
        ell: multiplicity of edges to vertex n + 1
        m: multiplicity of the other edges
        max_n: guard on n when ell = m = 1
        max_subgraphs: guard on the product of (multiplicity + 1) over edges
        threads: worker processes
        pivot_order: monomial order for pivots
        verbose: print a status line and show progress bars

    Returns:
        GradedSpan

    Raises:
        GuardExceededError: a guard is exceeded
    """
    graph = complete_multigraph(n, ell, m)
    _check_subgraph_guard(graph, n, ell, m, max_n, max_subgraphs)
    workers = resolve("threads", threads)
    status(f"building V_{n}^({ell},{m}) from slim subgraphs of {graph}", quiet=not verbose)

    walk = _SlimWalk(graph, lambda *_: None, with_polynomials=False)
    args = [{"n": n, "ell": ell, "m": m, "first": None, "pivot_order": pivot_order}]
    args += [
        {"n": n, "ell": ell, "m": m, "first": e, "pivot_order": pivot_order}
        for e in walk.branches()
    ]
    outcome = run_func_in_parallel(
        func=_reduce_branch, args=args, batch_size=len(args), max_workers=workers
    )

    merged: dict[int, EchelonBasis] = {}
    num_slim = 0
    for partial, count in progress(outcome["results"], enabled=verbose, desc="merging"):
        num_slim += count
        for k, rows in partial.items():
            if k not in merged:
                merged[k] = EchelonBasis(ceiling=_ceiling(n, k), pivot_order=pivot_order)
            for row in rows:
                merged[k].insert(row)

    span = GradedSpan(
        n=n,
        ell=ell,
        m=m,
        rows={k: tuple(b.rows) for k, b in sorted(merged.items())},
        pivots={k: tuple(b.pivots) for k, b in sorted(merged.items())},
        num_slim=num_slim,
        pivot_order=pivot_order,
    )
    status(
        f"V_{n}^({ell},{m}): dimension {span.dimension}, Hilbert {span.hilbert()}",
        level="success",
        quiet=not verbose,
    )
    return span


@beartype
def hilbert_series(span: GradedSpan) -> list[int]:
    """dimension of each graded piece, degree 0 first"""
    return span.hilbert()


def _image(row: Mapping[Monomial, int], w: Sequence[int], n: int) -> dict[Monomial, int]:
    """x_i -> x_{w(i)} applied in the chart x_{n+1} = 0, w a permutation of 1..n+1"""
    a = w[n]
    image: dict[Monomial, int] = {}
    if a == n + 1:
        for mon, c in row.items():
            moved = [0] * n
            for i, e in enumerate(mon):
                moved[w[i] - 1] = e
            image[tuple(moved)] = c
        return image
    j0 = w.index(n + 1)
    others = [i for i in range(n) if i != j0]
    for mon, c in row.items():
        for split in product(*(range(mon[i] + 1) for i in others)):
            coefficient = c * (-1) ** mon[j0]
            moved = [0] * n
            for i, t in zip(others, split):
                coefficient *= comb(mon[i], t) * (-1) ** (mon[i] - t)
                moved[w[i] - 1] = t
            moved[a - 1] = sum(mon) - sum(split)
            key = tuple(moved)
            image[key] = image.get(key, 0) + coefficient
    return {mon: c for mon, c in image.items() if c}


def _coefficient_of_image(row: Mapping[Monomial, int], w: Sequence[int], n: int, target: Monomial) -> int:
    """coefficient of `target` in `_image(row, w, n)`, without building the image"""
    a = w[n]
    if a == n + 1:
        return row.get(tuple(target[w[i] - 1] for i in range(n)), 0)
    j0 = w.index(n + 1)
    total = 0
    for mon, c in row.items():
        coefficient = c
        for i in range(n):
            if i == j0:
                continue
            t = target[w[i] - 1]
            if t > mon[i]:
                coefficient = 0
                break
            coefficient *= comb(mon[i], t)
        total += coefficient
    # every surviving term carries the sign (-1)^(exponent of x_a in target)
    return total * (-1) ** target[a - 1]


def _class_trace(
    rows: Sequence[dict], pivots: Sequence[Monomial], w: tuple[int, ...], n: int, check: bool, pivot_order: str
) -> Fraction:
    """trace of w on the span of `rows`; optionally verify that w preserves it"""
    trace = Fraction(0)
    for row, pivot in zip(rows, pivots):
        trace += Fraction(_coefficient_of_image(row, w, n, pivot), row[pivot])
    if check:
        basis = EchelonBasis.from_rows(rows, pivot_order=pivot_order)
        for row in rows:
            if basis.reduce(_image(row, w, n)):
                raise NonInvariantSubspaceError(
                    f"the permutation {w} moves a degree-{sum(next(iter(row)))} basis vector "
                    "out of the span"
                )
    return trace


@beartype
def degree_character(
    span: GradedSpan,
    k: int,
    group: Group = "S_n",
    *,
    check_invariance: bool = True,
    threads: int | None = None,
) -> ClassFunction:
    """Character of the symmetric group on the degree-k piece of the span.

    S_n permutes x_1..x_n; S_{n+1} permutes all n + 1 variables and only
    acts when ell == m. The trace is read off the pivots: the coordinate of
    w.b_j along b_j is the pivot coefficient of w.b_j divided by that of b_j.

    Args:
        span: a GradedSpan
        k: degree
        group: "S_n" or "S_n+1"
        check_invariance: also verify that every image lies in the span
        threads: worker processes, one conjugacy class per task

    Raises:
        InvalidInputError: group "S_n+1" with ell != m
        NonInvariantSubspaceError: an image leaves the span
    """
    if group == "S_n+1" and span.ell != span.m:
        raise InvalidInputError(
            f"S_{span.n + 1} does not act on V_{span.n}^({span.ell},{span.m})",
            fix="use group='S_n' when ell != m",
        )
    n = span.n
    size = n if group == "S_n" else n + 1
    rows = span.rows.get(k, ())
    pivots = span.pivots.get(k, ())
    classes = enum_partitions(size)
    args = []
    for tau in classes:
        w = class_representative(tau)
        w = w + tuple(range(len(w) + 1, n + 2))
        args.append(
            {
                "rows": rows,
                "pivots": pivots,
                "w": w,
                "n": n,
                "check": check_invariance,
                "pivot_order": span.pivot_order,
            }
        )
    outcome = run_func_in_parallel(
        func=_class_trace, args=args, max_workers=resolve("threads", threads)
    )
    return ClassFunction(size, dict(zip(classes, outcome["results"])))
