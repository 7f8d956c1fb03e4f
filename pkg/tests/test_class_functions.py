"""Tests for class functions on the symmetric groups"""

from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from parkext.characters.class_functions import (
    ClassFunction,
    character_table,
    class_representative,
    class_size,
    coset_character,
    dimension,
    induction_product,
    inner_product,
    irreducible_character,
    lie_character,
    named_character,
    park_character_direct,
    power_cycle_type,
    restrict,
    sym_power,
    tensor,
    z,
)
from parkext.combinatorics.partitions import dominates, enum_partitions
from parkext.exceptions import GuardExceededError, InvalidInputError


def _cycle_type_of(w):
    """cycle type of a one-line permutation, by walking its cycles"""
    seen, lengths = set(), []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = w[i - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@pytest.mark.parametrize(
    "tau,size",
    [((1, 1, 1), 1), ((2, 1), 3), ((3,), 2), ((4,), 6), ((2, 2), 3)],
)
def test_class_size(tau, size):
    assert class_size(tau) == size
    assert z(tau) * size == factorial(sum(tau))


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_count_the_group(n):
    sizes = {}
    for w in permutations(range(1, n + 1)):
        tau = _cycle_type_of(w)
        sizes[tau] = sizes.get(tau, 0) + 1
    assert sizes == {tuple(tau): class_size(tau) for tau in enum_partitions(n)}


def test_class_function_needs_every_class():
    with pytest.raises(InvalidInputError):
        ClassFunction(3, {(3,): 1})


def test_small_characters():
    assert irreducible_character((2, 1)).as_list() == [2, 0, -1]
    assert coset_character((2, 1)).as_list() == [3, 1, 0]
    assert named_character("reflection", 3).as_list() == [2, 0, -1]
    assert named_character("regular", 3).as_list() == [6, 0, 0]
    sign = named_character("sign", 4)
    assert tensor(sign, sign) == named_character("trivial", 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_and_sign_irreducibles(n):
    assert irreducible_character((n,)) == named_character("trivial", n)
    assert irreducible_character((1,) * n) == named_character("sign", n)
    assert coset_character((1,) * n) == named_character("regular", n)


@pytest.mark.parametrize("n", range(1, 7))
def test_orthonormality(n):
    table = character_table(n)
    for lam, chi in table.items():
        for mu, psi in table.items():
            assert inner_product(chi, psi) == (1 if lam == mu else 0)


@pytest.mark.slow
def test_orthonormality_seven():
    table = character_table(7)
    for lam, chi in table.items():
        for mu, psi in table.items():
            assert inner_product(chi, psi) == (1 if lam == mu else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_dimensions_sum_of_squares(n):
    assert sum(dimension(chi) ** 2 for chi in character_table(n).values()) == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_coset_positivity(n):
    """<M^lam, chi^mu> >= 0, and zero unless mu dominates lam"""
    table = character_table(n)
    for lam in enum_partitions(n):
        m_lam = coset_character(lam)
        for mu, chi in table.items():
            value = inner_product(m_lam, chi)
            assert value >= 0
            if not dominates(mu, lam):
                assert value == 0


def test_coset_inner_products():
    m21 = coset_character((2, 1))
    assert inner_product(m21, named_character("trivial", 3)) == 1
    assert inner_product(m21, irreducible_character((2, 1))) == 1


def test_induction_product():
    trivial_1 = named_character("trivial", 1)
    assert induction_product(trivial_1, trivial_1) == coset_character((1, 1))
    for a in range(1, 4):
        for b in range(1, a + 1):
            product = induction_product(named_character("trivial", a), named_character("trivial", b))
            assert product == coset_character((a, b))


def test_restriction():
    res = restrict(irreducible_character((2, 1)), 2)
    assert res == irreducible_character((2,)) + irreducible_character((1, 1))
    assert restrict(named_character("trivial", 5), 3) == named_character("trivial", 3)
    with pytest.raises(InvalidInputError):
        restrict(named_character("trivial", 3), 4)


@pytest.mark.parametrize("n", range(1, 6))
def test_branching_rule(n):
    """Res chi^lam is the sum of chi^mu over mu obtained by removing one box"""
    for lam in enum_partitions(n + 1):
        expected = ClassFunction(n, {tau: 0 for tau in enum_partitions(n)})
        for i in range(len(lam)):
            if i == len(lam) - 1 or lam[i] > lam[i + 1]:
                mu = list(lam)
                mu[i] -= 1
                expected = expected + irreducible_character(mu)
        assert restrict(irreducible_character(lam), n) == expected


def test_power_cycle_type():
    assert power_cycle_type((6,), 2) == (3, 3)
    assert power_cycle_type((6,), 3) == (2, 2, 2)
    assert power_cycle_type((4, 1), 4) == (1, 1, 1, 1, 1)


def test_symmetric_powers():
    reflection = named_character("reflection", 3)
    assert sym_power(reflection, 0) == named_character("trivial", 3)
    assert sym_power(reflection, 1) == reflection
    assert sym_power(reflection, 2).as_list() == [3, 1, 0]
    # Sym^k of the defining representation of S_n has dimension binom(n+k-1, k)
    defining = reflection + named_character("trivial", 3)
    assert dimension(sym_power(defining, 3)) == 10


@pytest.mark.parametrize("n", range(1, 7))
def test_lie_restricts_to_regular(n):
    lie = lie_character(n)
    assert lie.n == n + 1
    assert dimension(lie) == factorial(n)
    assert restrict(lie, n) == named_character("regular", n)


@pytest.mark.slow
def test_lie_restricts_to_regular_seven():
    assert restrict(lie_character(7), 7) == named_character("regular", 7)


def test_lie_two_is_the_two_dimensional_irreducible():
    assert lie_character(2) == irreducible_character((2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_park_character_direct(n):
    park = park_character_direct(n)
    assert dimension(park) == (n + 1) ** (n - 1)
    assert park.is_integral()


def test_park_character_guard():
    with pytest.raises(GuardExceededError):
        park_character_direct(8)
    assert park_character_direct(1) == named_character("trivial", 1)


def test_class_representative():
    for tau in enum_partitions(5):
        w = class_representative(tau)
        assert sorted(w) == [1, 2, 3, 4, 5]
        assert _cycle_type_of(w) == tuple(tau)


def test_class_function_arithmetic():
    chi = irreducible_character((2, 1))
    assert (chi + chi) == 2 * chi
    assert (chi - chi).as_list() == [0, 0, 0]
    assert (-chi)((3,)) == 1
    assert chi((1, 2)) == chi((2, 1))
    assert (chi * Fraction(1, 2)).as_list() == [1, 0, Fraction(-1, 2)]
    assert not (chi * Fraction(1, 2)).is_integral()
