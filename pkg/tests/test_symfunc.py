"""Tests for symmetric functions, Frobenius images and the parking expansions"""

from fractions import Fraction

import pytest

from parkext.characters.class_functions import (
    coset_character,
    induction_product,
    irreducible_character,
    named_character,
    park_character_direct,
)
from parkext.characters.symfunc import (
    GradedSymFunc,
    SymFunc,
    character_of,
    convert,
    frob_h,
    frobenius,
    graded_frobenius,
    grfrob_restricted_to_schur,
    park_grfrob,
)
from parkext.combinatorics.partitions import Partition, enum_partitions
from parkext.exceptions import InvalidInputError, NotACharacterError


def graded(n, basis, pieces):
    return GradedSymFunc(n, basis, tuple(SymFunc(n, basis, piece) for piece in pieces))


RES_V3_22 = graded(
    3,
    "h",
    [
        {(3,): 1},
        {(2, 1): 1},
        {(2, 1): 2},
        {(3,): 1, (2, 1): 1, (1, 1, 1): 1},
        {(2, 1): 3, (1, 1, 1): 1},
        {(2, 1): 3, (1, 1, 1): 2},
        {(2, 1): 2, (1, 1, 1): 3},
        {(2, 1): 2, (1, 1, 1): 3},
        {(1, 1, 1): 3},
        {(1, 1, 1): 1},
    ],
)


def test_park_grfrob_three():
    expected = graded(3, "h", [{(3,): 1}, {(2, 1): 1}, {(2, 1): 2}, {(1, 1, 1): 1}])
    assert park_grfrob(3) == expected
    assert park_grfrob(3).to_string() == "h_(3) q^0 + h_(2,1) q^1 + 2h_(2,1) q^2 + h_(1,1,1) q^3"


def test_park_grfrob_two_two():
    assert park_grfrob(3, 2, 2) == RES_V3_22
    assert sum(park_grfrob(3, 2, 2).hilbert_series()) == 128


@pytest.mark.parametrize(
    "n,ell,m",
    [(n, 1, 1) for n in range(1, 7)] + [(3, 2, 2), (3, 1, 2), (3, 3, 2), (4, 2, 2), (2, 3, 1)],
)
def test_total_dimension(n, ell, m):
    assert sum(park_grfrob(n, ell, m).hilbert_series()) == ell * (m * n + ell) ** (n - 1)


def test_frobenius_of_park_three():
    assert park_grfrob(3).at_q_equals_one() == SymFunc(3, "h", {(3,): 1, (2, 1): 3, (1, 1, 1): 1})


def test_restricted_v2_in_schur():
    restricted = grfrob_restricted_to_schur(park_grfrob(2))
    assert restricted == graded(2, "s", [{(2,): 1}, {(2,): 1, (1, 1): 1}])


def test_h_to_s():
    assert convert(SymFunc(3, "h", {(2, 1): 1}), "s") == SymFunc(3, "s", {(3,): 1, (2, 1): 1})
    assert convert(SymFunc(2, "s", {(1, 1): 1}), "h") == SymFunc(2, "h", {(1, 1): 1, (2,): -1})


@pytest.mark.parametrize("n", range(1, 6))
def test_basis_round_trip(n):
    for lam in enum_partitions(n):
        s = SymFunc(n, "s", {lam: 1})
        assert convert(convert(s, "h"), "s") == s
        h = SymFunc(n, "h", {lam: 1})
        assert convert(convert(h, "s"), "h") == h


def test_non_integral_conversion():
    half = SymFunc(2, "s", {(2,): Fraction(1, 2)})
    assert convert(half, "h", integral=False)[(2,)] == Fraction(1, 2)
    assert not half.is_integral()


@pytest.mark.parametrize("n", range(1, 6))
def test_frobenius_of_basic_characters(n):
    assert frobenius(named_character("trivial", n)) == SymFunc(n, "s", {(n,): 1})
    for lam in enum_partitions(n):
        assert frobenius(irreducible_character(lam)) == SymFunc(n, "s", {lam: 1})
        assert convert(frobenius(coset_character(lam)), "h") == frob_h(n, {lam: 1})


def test_frobenius_rejects_non_characters():
    with pytest.raises(NotACharacterError):
        frobenius(irreducible_character((2, 1)) * Fraction(1, 2))
    lenient = frobenius(irreducible_character((2, 1)) * Fraction(1, 2), strict=False)
    assert lenient[(2, 1)] == Fraction(1, 2)


def test_frobenius_is_multiplicative():
    """Frob(chi o psi) = Frob(chi) Frob(psi) on coset characters, a + b <= 6"""
    for a in range(1, 4):
        for b in range(1, 4):
            for lam in enum_partitions(a):
                for mu in enum_partitions(b):
                    product = induction_product(coset_character(lam), coset_character(mu))
                    expected = frob_h(a, {lam: 1}) * frob_h(b, {mu: 1})
                    assert convert(frobenius(product), "h") == expected


def test_induction_of_two_points():
    trivial = named_character("trivial", 1)
    assert frobenius(induction_product(trivial, trivial)) == SymFunc(2, "s", {(2,): 1, (1, 1): 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_park_character_cross_check(n):
    """counting fixed parking functions agrees with the Dyck-path sum"""
    assert park_character_direct(n) == character_of(park_grfrob(n).at_q_equals_one())


def test_character_of_inverts_frobenius():
    for lam in enum_partitions(4):
        chi = coset_character(lam)
        assert character_of(frobenius(chi)) == chi
        assert character_of(frob_h(4, {lam: 1})) == chi


def test_symfunc_validation_and_arithmetic():
    with pytest.raises(InvalidInputError):
        SymFunc(3, "s", {(2,): 1})
    a = SymFunc(2, "s", {(2,): 1})
    b = SymFunc(2, "s", {(2,): -1, (1, 1): 1})
    assert (a + b) == SymFunc(2, "s", {(1, 1): 1})
    assert (2 * a)[(2,)] == 2
    assert SymFunc(2, "s", {(2,): 0}).is_zero()
    with pytest.raises(InvalidInputError):
        a + SymFunc(2, "h", {(2,): 1})
    assert a.dimension() == 1
    assert SymFunc(3, "h", {(2, 1): 1}).dimension() == 3


def test_graded_symfunc():
    g = graded(2, "s", [{(2,): 1}, {(1, 1): 1}, {}])
    assert len(g.degrees) == 2
    assert g[5].is_zero()
    assert g.hilbert_series() == [1, 1]
    assert g.terms() == [(0, Partition((2,)), 1), (1, Partition((1, 1)), 1)]
    assert graded_frobenius([named_character("trivial", 2), named_character("sign", 2)]) == g
    with pytest.raises(InvalidInputError):
        GradedSymFunc(2, "s", (SymFunc(2, "h", {(2,): 1}),))
