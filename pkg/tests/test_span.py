"""Tests for slim-subgraph spans and their graded characters"""

from fractions import Fraction
import itertools

import pytest

from parkext.characters.class_functions import lie_character, named_character, sym_power, tensor
from parkext.characters.symfunc import (
    GradedSymFunc,
    SymFunc,
    character_of,
    graded_frobenius,
    park_grfrob,
)
from parkext.exceptions import GuardExceededError, InvalidInputError, NonInvariantSubspaceError
from parkext.graphs.multigraph import complete_multigraph, is_connected
from parkext.polyengine.polynomial import Polynomial, graph_weight
from parkext.polyengine.span import (
    EchelonBasis,
    GradedSpan,
    build_span,
    degree_character,
    enum_slim,
    hilbert_series,
    lift,
    rank_of,
)


def schur(n, pieces):
    return GradedSymFunc(n, "s", tuple(SymFunc(n, "s", piece) for piece in pieces))


GRFROB_V3 = schur(
    4,
    [
        {(4,): 1},
        {(3, 1): 1},
        {(4,): 1, (3, 1): 1, (2, 2): 1},
        {(3, 1): 1, (2, 1, 1): 1},
    ],
)

GRFROB_V4 = schur(
    5,
    [
        {(5,): 1},
        {(4, 1): 1},
        {(5,): 1, (4, 1): 1, (3, 2): 1},
        {(5,): 1, (4, 1): 2, (3, 2): 1, (3, 1, 1): 1},
        {(5,): 1, (4, 1): 2, (3, 2): 2, (3, 1, 1): 1, (2, 2, 1): 1},
        {(5,): 1, (4, 1): 2, (3, 2): 2, (3, 1, 1): 2, (2, 2, 1): 1},
        {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1},
    ],
)


@pytest.fixture(scope="module")
def span3():
    return build_span(3)


def _graded_character(span, group):
    return graded_frobenius(
        [degree_character(span, k, group) for k in range(len(span.hilbert()))]
    )


@pytest.mark.parametrize(
    "n,hilbert",
    [(1, [1]), (2, [1, 2]), (3, [1, 3, 6, 6]), (4, [1, 4, 10, 20, 30, 36, 24])],
)
def test_hilbert_series(n, hilbert):
    span = build_span(n)
    assert hilbert_series(span) == hilbert
    assert span.dimension == (n + 1) ** (n - 1)


@pytest.mark.slow
def test_dimension_five():
    assert build_span(5).dimension == 6**4


@pytest.mark.parametrize("n,ell,m,dimension", [(3, 2, 2, 128), (3, 1, 2, 49), (3, 3, 2, 243)])
def test_generalized_dimensions(n, ell, m, dimension):
    span = build_span(n, ell, m)
    assert span.dimension == dimension == ell * (m * n + ell) ** (n - 1)
    assert span.hilbert() == park_grfrob(n, ell, m).hilbert_series()


@pytest.mark.slow
def test_generalized_dimension_four():
    assert build_span(4, 2, 2).dimension == 2 * 10**3


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 38), (4, 728)])
def test_enum_slim_counts(n, count):
    """slim subgraphs of K_{n+1} are complements of connected spanning subgraphs"""
    slim = enum_slim(n)
    assert len(slim) == count
    graph = complete_multigraph(n)
    assert all(graph.is_slim(sub) for sub in slim)
    assert len({tuple(sorted(sub.edges.items())) for sub in slim}) == count

    edges = graph.edge_list()
    connected_complements = sum(
        is_connected(n + 1, [e for e in edges if e not in removed])
        for r in range(len(edges) + 1)
        for removed in itertools.combinations(edges, r)
    )
    assert connected_complements == count


def test_num_slim_is_recorded(span3):
    assert span3.num_slim == 38


def test_slim_weights_lie_in_the_span(span3):
    for sub in enum_slim(3):
        weight = graph_weight(sub, drop_last=True)
        k = weight.degree()
        basis = span3.basis(k)
        assert rank_of(basis + [weight]) == len(basis)


def test_lift_is_translation_invariant(span3):
    for k in span3.degrees:
        for p, lifted in zip(span3.basis(k), span3.lifted_basis(k)):
            assert lifted.nvars == 4
            assert lifted.substitute_zero(4) == p
            assert lift(p) == lifted


def test_lifted_basis_of_triangle():
    span = build_span(2)
    lifted = span.lifted_basis(1)
    assert len(lifted) == 2
    # every linear form in the span has coefficients summing to zero
    for p in lifted:
        assert sum(p.terms.values()) == 0


@pytest.mark.parametrize("k", range(4))
def test_restricted_character_matches_paths(span3, k):
    assert degree_character(span3, k, "S_n") == character_of(park_grfrob(3)[k])


def test_graded_character_three(span3):
    assert _graded_character(span3, "S_n+1") == GRFROB_V3


def test_graded_character_four():
    assert _graded_character(build_span(4), "S_n+1") == GRFROB_V4


def test_restricted_two_two():
    span = build_span(3, 2, 2)
    for k in range(10):
        assert degree_character(span, k, "S_n") == character_of(park_grfrob(3, 2, 2)[k])


@pytest.fixture(scope="module")
def spans():
    """spans shared by the extreme-degree and restriction tests, built on first use"""
    built = {}

    def get(n, ell=1, m=1):
        if (n, ell, m) not in built:
            built[(n, ell, m)] = build_span(n, ell, m)
        return built[(n, ell, m)]

    return get


@pytest.mark.parametrize("n,ell,m", [(2, 1, 1), (3, 1, 1), (4, 1, 1), (3, 2, 2)])
def test_extreme_degrees(spans, n, ell, m):
    span = spans(n, ell, m)

    def piece(k):
        return degree_character(span, k, "S_n+1")

    assert piece(0) == named_character("trivial", n + 1)
    degree_one = piece(1)
    assert degree_one == named_character("reflection", n + 1)
    for k in range(2, n):
        assert piece(k) == sym_power(degree_one, k)
    if ell == 1:
        assert piece(n) != sym_power(degree_one, n)

    top = n * (ell - 1) + m * n * (n - 1) // 2
    assert len(span.hilbert()) == top + 1
    twist = named_character("sign" if ell % 2 else "trivial", n + 1)
    assert piece(top) == tensor(lie_character(n), twist)


def test_top_degree_of_v3(span3):
    top = degree_character(span3, 3, "S_n+1")
    assert graded_frobenius([top]) == schur(4, [{(3, 1): 1, (2, 1, 1): 1}])


@pytest.mark.parametrize("k", range(7))
def test_restricted_character_matches_paths_four(spans, k):
    assert degree_character(spans(4), k, "S_n") == character_of(park_grfrob(4)[k])


@pytest.mark.slow
def test_restricted_character_matches_paths_five():
    span = build_span(5)
    expected = park_grfrob(5)
    for k in range(len(span.hilbert())):
        assert degree_character(span, k, "S_n") == character_of(expected[k])


def test_out_of_range_degree_is_zero(span3):
    chi = degree_character(span3, 7)
    assert all(value == 0 for value in chi.as_list())


def test_larger_group_needs_equal_multiplicities():
    with pytest.raises(InvalidInputError):
        degree_character(build_span(2, 1, 2), 1, "S_n+1")


def test_non_invariant_subspace():
    """the span of x1 alone is not stable under swapping x1 and x2"""
    span = GradedSpan(n=2, ell=1, m=1, rows={1: ({(1, 0): 1},)}, pivots={1: ((1, 0),)})
    with pytest.raises(NonInvariantSubspaceError):
        degree_character(span, 1)
    chi = degree_character(span, 1, check_invariance=False)
    assert chi.as_list() == [1, 0]


def test_pivot_order_does_not_change_the_span(span3):
    lex = build_span(3, pivot_order="lex")
    assert lex.hilbert() == span3.hilbert()
    for k in span3.degrees:
        assert rank_of(span3.basis(k) + lex.basis(k)) == len(span3.basis(k))
        assert degree_character(lex, k, "S_n+1") == degree_character(span3, k, "S_n+1")


def test_worker_count_does_not_change_the_span(span3):
    parallel = build_span(3, threads=2)
    assert parallel.rows == span3.rows
    assert parallel.pivots == span3.pivots
    assert parallel.num_slim == span3.num_slim


def test_guards():
    with pytest.raises(GuardExceededError) as error:
        build_span(6)
    assert error.value.guard == "max_n"
    with pytest.raises(GuardExceededError):
        build_span(3, 2, 2, max_subgraphs=100)
    with pytest.raises(GuardExceededError):
        enum_slim(3, 2, 2, max_subgraphs=100)


def test_echelon_basis():
    basis = EchelonBasis(ceiling=2)
    assert basis.insert({(1, 0): 2, (0, 1): -2})
    assert not basis.insert({(1, 0): 1, (0, 1): -1})
    assert basis.rows == [{(1, 0): 1, (0, 1): -1}]
    assert basis.insert({(0, 1): 3})
    assert basis.full
    assert not basis.insert({(1, 0): 5})
    # fully reduced: no row has an entry at another row's pivot
    assert basis.rows == [{(1, 0): 1}, {(0, 1): 1}]
    assert basis.reduce({(1, 0): 4, (0, 1): 7}) == {}


def test_rank_of():
    x1, x2 = Polynomial.variable(2, 1), Polynomial.variable(2, 2)
    assert rank_of([x1, x2, x1 + x2]) == 2
    assert rank_of([]) == 0
    with pytest.raises(InvalidInputError):
        rank_of([Polynomial(2, {(1, 0): Fraction(1, 2)})])
