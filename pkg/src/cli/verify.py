"""Verification suites run by `parkext verify`.

Every suite returns a list of `Verdict`s; the run passes when none of them
failed. Spans are built once per run and shared between suites.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb
import random

from parkext.characters.class_functions import (
    character_table,
    class_representative,
    coset_character,
    induction_product,
    inner_product,
    lie_character,
    named_character,
    park_character_direct,
    restrict,
    sym_power,
    tensor,
)
from parkext.characters.symfunc import character_of, convert, frobenius, park_grfrob
from parkext.cli.report import Verdict
from parkext.combinatorics.dyck import enum_dyck_paths, path_stats
from parkext.combinatorics.parking import (
    apply_permutation_to_labeling,
    apply_permutation_to_parking,
    enum_parking_functions,
    labeled_path_to_parking,
    parking_to_labeled_path,
)
from parkext.combinatorics.partitions import Partition, enum_partitions, mult_partition
from parkext.exceptions import BudgetExhaustedError
from parkext.extension.feasibility import (
    coset_decomposition,
    extends_as_coset_sum,
    extends_to,
)
from parkext.extension.shapes import near_rectangle
from parkext.graphs.coloring import coboundary_coefficients, coboundary_to_tutte_check
from parkext.graphs.multigraph import Multigraph, complete_multigraph
from parkext.graphs.trees import activity_tutte, corank_nullity_tutte
from parkext.graphs.tutte_poly import initial_coefficients_check, tutte, tutte_hilbert
from parkext.polyengine.basis import phi_is_isomorphism
from parkext.polyengine.span import GradedSpan, build_span, degree_character
from parkext.polyengine.staircase import check_dominance_triangularity, check_triangularity
from parkext.utils.core import status

__all__ = ["SuiteOptions", "SUITES", "run_suite"]

# (n, ell, m) cases checked besides ell = m = 1; the last one only with `stretch`
LM_CASES = [(3, 2, 2), (3, 1, 2), (3, 3, 2)]
LM_STRETCH_CASES = [(4, 2, 2)]
TRIANGULARITY_LM_CASES = [(3, 2, 2), (3, 1, 2), (3, 3, 2), (4, 3, 2), (4, 2, 2)]
BIJECTION_MAX_N = 6
ORTHONORMALITY_MAX_N = 7
PHI_MAX_N = 4
RANDOM_GRAPHS = 20
RANDOM_SEED = 2024

PARK_4_COSETS = {
    Partition((1, 1, 1, 1)): 1,
    Partition((2, 1, 1)): 6,
    Partition((2, 2)): 2,
    Partition((3, 1)): 4,
    Partition((4,)): 1,
}

# (n, lam) with M^lam of S_n not the restriction of any S_{n+1}-module, n <= 6
NON_EXTENDING_COSETS = {(6, Partition((3, 2, 1)))}


@dataclass
class SuiteOptions:
    """Size bounds shared by the suites, and a cache of built spans."""

    max_n: int = 4
    max_N: int = 10
    node_budget: int | None = None
    threads: int | None = None
    stretch: bool = False
    verbose: bool = False
    _spans: dict = field(default_factory=dict, repr=False)

    def span(self, n: int, ell: int = 1, m: int = 1) -> GradedSpan:
        key = (n, ell, m)
        if key not in self._spans:
            self._spans[key] = build_span(
                n, ell, m, max_n=max(n, self.max_n), threads=self.threads, verbose=self.verbose
            )
        return self._spans[key]

    def lm_cases(self) -> list[tuple[int, int, int]]:
        return LM_CASES + (LM_STRETCH_CASES if self.stretch else [])


def _label(n: int, ell: int, m: int) -> str:
    return f"V_{n}" if ell == m == 1 else f"V_{n}^({ell},{m})"


def _dyck_sum_agreement(span: GradedSpan, options: SuiteOptions) -> Verdict:
    """per-degree S_n character of the span against the sum of M^lambda(D) over area-k paths"""
    expected = park_grfrob(span.n, span.ell, span.m)
    top = max(len(span.hilbert()), len(expected.degrees))
    bad = [
        k
        for k in range(top)
        if degree_character(span, k, "S_n", threads=options.threads)
        != character_of(expected[k])
    ]
    return Verdict(
        f"{_label(span.n, span.ell, span.m)}: S_n character = Dyck-path sum",
        not bad,
        f"degrees {bad} differ" if bad else f"{top} degrees",
    )


def suite_main(options: SuiteOptions) -> list[Verdict]:
    """dimensions and the restricted character of every graded piece"""
    verdicts = []
    for n in range(1, options.max_n + 1):
        span = options.span(n)
        expected = (n + 1) ** (n - 1)
        verdicts.append(Verdict(f"dim V_{n} = {expected}", span.dimension == expected, span.dimension))
        verdicts.append(_dyck_sum_agreement(span, options))
    for n, ell, m in options.lm_cases():
        span = options.span(n, ell, m)
        expected = ell * (m * n + ell) ** (n - 1)
        verdicts.append(
            Verdict(f"dim {_label(n, ell, m)} = {expected}", span.dimension == expected, span.dimension)
        )
        verdicts.append(_dyck_sum_agreement(span, options))
    return verdicts


def _extreme_degrees(span: GradedSpan, options: SuiteOptions) -> list[Verdict]:
    n, ell = span.n, span.ell
    label = _label(n, span.ell, span.m)

    def piece(k: int):
        return degree_character(span, k, "S_n+1", threads=options.threads)

    degree_one = piece(1)
    verdicts = [
        Verdict(f"{label}(0) is trivial", piece(0) == named_character("trivial", n + 1)),
        Verdict(f"{label}(1) is the reflection", degree_one == named_character("reflection", n + 1)),
    ]
    for k in range(2, n + 1):
        same = piece(k) == sym_power(degree_one, k)
        if k < n:
            verdicts.append(Verdict(f"{label}({k}) = Sym^{k}", same))
        elif ell == 1:
            verdicts.append(Verdict(f"{label}({k}) differs from Sym^{k}", not same))
    top = n * (ell - 1) + span.m * comb(n, 2)
    sign = named_character("sign", n + 1)
    twist = sign if ell % 2 else named_character("trivial", n + 1)
    verdicts.append(
        Verdict(f"{label}({top}) = Lie_{n} x sign^{ell}", piece(top) == tensor(lie_character(n), twist))
    )
    return verdicts


def suite_extremes(options: SuiteOptions) -> list[Verdict]:
    """trivial, reflection, symmetric powers and the Lie character at the top"""
    verdicts = []
    for n in range(2, options.max_n + 1):
        verdicts.extend(_extreme_degrees(options.span(n), options))
    for n, ell, m in options.lm_cases():
        if ell == m:
            verdicts.extend(_extreme_degrees(options.span(n, ell, m), options))
    return verdicts


def suite_triangularity(options: SuiteOptions) -> list[Verdict]:
    """unitriangularity of phi(p(D)) and phi as an isomorphism"""
    verdicts = []
    cases = [(n, 1, 1) for n in range(1, options.max_n + 1)] + TRIANGULARITY_LM_CASES
    for n, ell, m in cases:
        paths = enum_dyck_paths(n, ell, m)
        failures = [str(p.mu) for p in paths if not check_triangularity(p)[0]]
        verdicts.append(
            Verdict(
                f"{_label(n, ell, m)}: phi(p(D)) unitriangular",
                not failures,
                ", ".join(failures) if failures else f"{len(paths)} paths",
            )
        )
        dominance = sum(not check_dominance_triangularity(p) for p in paths)
        verdicts.append(
            Verdict(f"{_label(n, ell, m)}: dominance analogue fails", None, f"{dominance} paths")
        )
    phi_cases = [(n, 1, 1) for n in range(1, min(options.max_n, PHI_MAX_N) + 1)] + options.lm_cases()
    for n, ell, m in phi_cases:
        verdicts.append(
            Verdict(
                f"{_label(n, ell, m)}: phi is an isomorphism",
                phi_is_isomorphism(n, ell, m, max_n=max(n, options.max_n), threads=options.threads),
            )
        )
    return verdicts


def _random_multigraphs(count: int, seed: int) -> list[Multigraph]:
    """complete graphs on 3..6 vertices with multiplicities 1..2"""
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        v = rng.randint(3, 6)
        edges = {(i, j): rng.randint(1, 2) for i in range(1, v + 1) for j in range(i + 1, v + 1)}
        graphs.append(Multigraph(v, edges))
    return graphs


def suite_tutte(options: SuiteOptions) -> list[Verdict]:
    """Hilbert series against the Tutte evaluation, initial coefficients, colourings"""
    verdicts = []
    cases = [(n, 1, 1) for n in range(1, options.max_n + 1)] + options.lm_cases()
    for n, ell, m in cases:
        graph = complete_multigraph(n, ell, m)
        hilbert = options.span(n, ell, m).hilbert()
        verdicts.append(
            Verdict(f"Hilbert {_label(n, ell, m)} = Tutte evaluation", hilbert == tutte_hilbert(graph), hilbert)
        )
    for n in range(1, options.max_n + 1):
        verdicts.append(
            Verdict(f"K_{n + 1}: initial coefficients", initial_coefficients_check(complete_multigraph(n)))
        )
    random_graphs = _random_multigraphs(RANDOM_GRAPHS, RANDOM_SEED)
    passed = sum(initial_coefficients_check(g) for g in random_graphs)
    verdicts.append(
        Verdict("random multigraphs: initial coefficients", passed == len(random_graphs), f"{passed}/{len(random_graphs)}")
    )
    for v in range(2, 6):
        graph = complete_multigraph(v - 1)
        e = graph.num_edges
        for colors in range(1, 4):
            census = coboundary_coefficients(graph, colors)
            gap = all(census[i] == 0 for i in range(e - v + 2, e))
            verdicts.append(
                Verdict(f"K_{v}, {colors} colours: c_e = lambda and gap", census[e] == colors and gap, census)
            )
    for v in (3, 4):
        graph = complete_multigraph(v - 1)
        agree = all(coboundary_to_tutte_check(graph, lam, nu) for lam in (2, 3) for nu in (2, 3))
        verdicts.append(Verdict(f"K_{v}: colouring census = Tutte substitution", agree))
    return verdicts


def suite_bijection(options: SuiteOptions) -> list[Verdict]:
    """labeled Dyck paths against parking functions"""
    verdicts = []
    for n in range(1, BIJECTION_MAX_N + 1):
        functions = enum_parking_functions(n)
        verdicts.append(
            Verdict(f"|Park_{n}| = {(n + 1) ** (n - 1)}", len(functions) == (n + 1) ** (n - 1), len(functions))
        )
        round_trip = all(labeled_path_to_parking(*parking_to_labeled_path(pf)) == pf for pf in functions)
        verdicts.append(Verdict(f"Park_{n}: labeled paths round trip", round_trip))
        if n <= 4:
            equivariant = True
            for tau in enum_partitions(n):
                w = class_representative(tau)
                for pf in functions:
                    path, labeling = parking_to_labeled_path(pf)
                    moved = labeled_path_to_parking(path, apply_permutation_to_labeling(w, labeling))
                    equivariant &= moved == apply_permutation_to_parking(w, pf)
            verdicts.append(Verdict(f"Park_{n}: bijection commutes with S_{n}", equivariant))
        if n <= 5:
            verdicts.append(
                Verdict(
                    f"Park_{n}: fixed points = sum of M^lambda(D)",
                    park_character_direct(n) == character_of(park_grfrob(n).at_q_equals_one()),
                )
            )
    return verdicts


def _attempt(run: Callable) -> bool | None:
    """the verdict of one search, None when the node budget ran out"""
    try:
        return run().feasible
    except BudgetExhaustedError:
        return None


def _decide(name: str, run: Callable, expected: bool) -> Verdict:
    try:
        result = run()
    except BudgetExhaustedError as error:
        return Verdict(name, None, f"inconclusive after {error.nodes_explored} nodes")
    return Verdict(name, result.feasible == expected, result.verdict)


def _scan(name: str, cases: dict, run: Callable, expected: Callable) -> Verdict:
    """one verdict over many searches: mismatches fail it, undecided cases are listed"""
    mismatched, undecided = [], []
    for label, case in cases.items():
        verdict = _attempt(lambda: run(case))
        if verdict is None:
            undecided.append(label)
        elif verdict != expected(case):
            mismatched.append(label)
    value = ", ".join(mismatched) if mismatched else f"{len(cases)} cases"
    if undecided:
        value += f"; inconclusive: {', '.join(undecided)}"
    return Verdict(name, None if undecided and not mismatched else not mismatched, value)


def suite_extension(options: SuiteOptions) -> list[Verdict]:
    """extension verdicts for coset, parking, Lie and irreducible characters"""
    budget, threads = options.node_budget, options.threads

    def extend(chi, N, **kwargs):
        return extends_to(chi, N, node_budget=budget, threads=threads, **kwargs)

    verdicts = [
        _decide("M^(3,2,2) does not extend to S_8", lambda: extend(coset_character((3, 2, 2)), 8), False)
    ]
    for n in range(1, 7):
        cosets = {str(lam): lam for lam in enum_partitions(n)}
        verdicts.append(
            _scan(
                f"S_{n}: coset modules extending to S_{n + 1}",
                cosets,
                lambda lam, n=n: extend(coset_character(lam), n + 1),
                lambda lam, n=n: (n, lam) not in NON_EXTENDING_COSETS,
            )
        )
    park_4 = character_of(park_grfrob(4).at_q_equals_one())
    verdicts.append(_decide("Park_4 extends to S_5", lambda: extend(park_4, 5), True))
    decomposition = coset_decomposition(park_4)
    verdicts.append(Verdict("Park_4 coset decomposition", decomposition == PARK_4_COSETS, decomposition))
    verdicts.append(
        _decide(
            "Park_4 is a restricted coset sum",
            lambda: extends_as_coset_sum(park_4, 5, node_budget=budget, threads=threads),
            True,
        )
    )
    park_3 = character_of(park_grfrob(3).at_q_equals_one())
    verdicts.append(
        _decide(
            "Park_3 is a restricted coset sum",
            lambda: extends_as_coset_sum(park_3, 4, node_budget=budget, threads=threads),
            True,
        )
    )
    for n in range(1, min(ORTHONORMALITY_MAX_N, options.max_N - 1) + 1):
        table = character_table(n)
        verdicts.append(
            _scan(
                f"S_{n}: extendable irreducibles are the near rectangles",
                {str(lam): lam for lam in table},
                lambda lam, n=n: extend(table[lam], n + 1),
                near_rectangle,
            )
        )
    for n in range(1, 5):
        verdicts.append(
            _decide(f"Lie_{n} extends to S_{n + 2}", lambda n=n: extend(lie_character(n), n + 2), True)
        )
    for n in range(4, 7):
        verdicts.append(
            _decide(
                f"reflection of S_{n + 1} does not extend to S_{n + 2}",
                lambda n=n: extend(named_character("reflection", n + 1), n + 2),
                False,
            )
        )
    if options.stretch:
        park_5 = character_of(park_grfrob(5).at_q_equals_one())
        for N, expected in ((10, True), (11, False)):
            verdicts.append(
                _decide(
                    f"Park_5 {'extends' if expected else 'does not extend'} to S_{N}",
                    lambda N=N: extend(park_5, N, max_N=N),
                    expected,
                )
            )
    return verdicts


def suite_properties(options: SuiteOptions) -> list[Verdict]:
    """orthonormality, Frobenius products, area multiplicities, Lie restriction, Tutte oracles"""
    verdicts = []
    for n in range(1, ORTHONORMALITY_MAX_N + 1):
        table = character_table(n)
        ok = all(
            inner_product(chi, psi) == (1 if lam == mu else 0)
            for lam, chi in table.items()
            for mu, psi in table.items()
        )
        verdicts.append(Verdict(f"S_{n}: irreducibles are orthonormal", ok))
    ok = True
    for a in range(1, 4):
        for b in range(1, 4):
            for lam in enum_partitions(a):
                for mu in enum_partitions(b):
                    product = induction_product(coset_character(lam), coset_character(mu))
                    merged = Partition.from_unsorted(tuple(lam) + tuple(mu))
                    ok &= convert(frobenius(product), "h").coeffs == {merged: 1}
    verdicts.append(Verdict("Frob(M^lam o M^mu) = h_lam h_mu", ok))
    ok = all(
        path_stats(p)[0] == mult_partition(p.mu)
        for n in range(1, BIJECTION_MAX_N + 1)
        for p in enum_dyck_paths(n)
    )
    verdicts.append(Verdict("mult(mu(D)) = lambda(D)", ok))
    for n in range(1, BIJECTION_MAX_N + 1):
        count = len(enum_parking_functions(n))
        verdicts.append(Verdict(f"|Park_{n}|", count == (n + 1) ** (n - 1), count))
    for n in range(1, ORTHONORMALITY_MAX_N + 1):
        verdicts.append(
            Verdict(f"Res Lie_{n} is regular", restrict(lie_character(n), n) == named_character("regular", n))
        )
    graphs = {
        "K_3": complete_multigraph(2),
        "K_4": complete_multigraph(3),
        "K_3^(2,2)": complete_multigraph(2, 2, 2),
        "K_4 with two doubled edges": Multigraph(4, {(1, 2): 2, (1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1, (3, 4): 2}),
    }
    for name, graph in graphs.items():
        verdicts.append(
            Verdict(f"{name}: deletion-contraction = corank-nullity", tutte(graph) == corank_nullity_tutte(graph))
        )
    verdicts.append(Verdict("K_4: activities = deletion-contraction", activity_tutte(complete_multigraph(3)) == tutte(complete_multigraph(3))))
    return verdicts


SUITES: dict[str, Callable[[SuiteOptions], list[Verdict]]] = {
    "main": suite_main,
    "extremes": suite_extremes,
    "triangularity": suite_triangularity,
    "tutte": suite_tutte,
    "bijection": suite_bijection,
    "extension": suite_extension,
    "properties": suite_properties,
}


def run_suite(name: str, options: SuiteOptions) -> list[Verdict]:
    """run one suite, or every suite for "all" """
    names = list(SUITES) if name == "all" else [name]
    verdicts = []
    for suite in names:
        status(f"running suite {suite}", quiet=not options.verbose)
        verdicts.extend(SUITES[suite](options))
    return verdicts
