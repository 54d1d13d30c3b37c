"""
Tests for the harmonic tables and brute-force oracles.
"""

import pytest
from fractions import Fraction
from sympy import primerange

from congruences.exactmath import harmonic_exact, sum_pow_harmonic_exact
from congruences.exceptions import DomainError
from congruences.harmonic import (
    harmonic_table,
    reflection_check,
    reflection_sides,
    sum_pow_harmonic,
    sun_binomial_check,
    sun_binomial_sides,
    triple_sum_ij4k,
    triple_sum_ij4k_literal,
)
from congruences.modring import embed, make_ring


@pytest.fixture
def ring49():
    return make_ring(7, 2)


def test_table_matches_exact_harmonic_numbers(ring49):
    table = harmonic_table(ring49)
    for k in range(7):
        assert table.harmonic(k) == embed(harmonic_exact(k), ring49)
    assert table.inverses[3] * 3 % 49 == 1


@pytest.mark.parametrize("p", list(primerange(5, 500)))
def test_wolstenholme(p):
    assert harmonic_table(make_ring(p, 2)).harmonic(p - 1).value == 0
    assert harmonic_table(make_ring(p, 1)).harmonic(p - 1, 2).value == 0


@pytest.mark.parametrize("m, n, p, expected", [
    (2, 1, 7, 20),
    (1, 1, 7, 17),
    (3, 1, 7, 28),
    (2, 2, 7, 26),
    (3, 2, 7, 48),
    (4, 2, 7, 14),
    (5, 2, 7, 31),
    (0, 1, 5, 21),
    (1, 1, 5, 22),
    (2, 1, 5, 11),
    (0, 2, 5, 8),
    (1, 2, 5, 1),
    (2, 2, 5, 9),
    (0, 3, 5, 11),
])
def test_oracle_values(m, n, p, expected):
    ring = make_ring(p, 2)
    assert sum_pow_harmonic(m, n, ring) == ring.residue(expected)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_oracle_agrees_with_exact_sum(p):
    ring = make_ring(p, 2)
    table = harmonic_table(ring)
    for m in range(0, 5):
        for n in range(0, 4):
            assert sum_pow_harmonic(m, n, ring, table) == embed(sum_pow_harmonic_exact(m, n, p), ring)


@pytest.mark.parametrize("p, m, expected", [
    (7, 2, 0), (7, 4, 5),
    (11, 2, 0), (11, 4, 2),
    (13, 2, 0), (13, 4, 9),
])
def test_inverse_power_oracle(p, m, expected):
    ring = make_ring(p, 1)
    assert sum_pow_harmonic(-m, 2, ring) == ring.residue(expected)


def test_inverse_power_matches_exact():
    ring = make_ring(7, 2)
    exact = sum(Fraction(1, k) * harmonic_exact(k) for k in range(1, 7))
    assert sum_pow_harmonic(-1, 1, ring) == embed(exact, ring)


def test_oracle_validation(ring49):
    with pytest.raises(DomainError):
        sum_pow_harmonic(1, 4, ring49)
    with pytest.raises(DomainError):
        sum_pow_harmonic(1, 1, ring49, harmonic_table(make_ring(7, 1)))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_reflection(p):
    ring = make_ring(p, 1)
    table = harmonic_table(ring)
    for k in range(1, p):
        assert reflection_check(k, 1, ring, table)
        assert reflection_check(k, 2, ring, table)


def test_reflection_validation(ring49):
    with pytest.raises(DomainError):
        reflection_sides(1, 1, harmonic_table(ring49))
    table = harmonic_table(make_ring(7, 1))
    with pytest.raises(DomainError):
        reflection_sides(7, 1, table)
    with pytest.raises(DomainError):
        reflection_sides(2, 3, table)


@pytest.mark.parametrize("p, expected", [(5, 2), (7, 5), (11, 9), (13, 4)])
def test_triple_sum_forms_agree(p, expected):
    ring = make_ring(p, 1)
    assert triple_sum_ij4k_literal(ring) == ring.residue(expected)
    assert triple_sum_ij4k(ring) == ring.residue(expected)


def test_triple_sum_needs_prime_modulus(ring49):
    with pytest.raises(DomainError):
        triple_sum_ij4k(ring49)


@pytest.mark.parametrize("p", list(primerange(5, 32)))
def test_sun_binomial_congruence(p):
    ring = make_ring(p, 3)
    table = harmonic_table(ring)
    for k in range(1, p):
        assert sun_binomial_check(k, ring, table)


def test_sun_binomial_validation(ring49):
    with pytest.raises(DomainError):
        sun_binomial_sides(1, harmonic_table(ring49))


@pytest.mark.parametrize("order", [0, 3])
def test_table_holds_only_orders_one_and_two(ring49, order):
    with pytest.raises(DomainError):
        harmonic_table(ring49).harmonic(3, order)
