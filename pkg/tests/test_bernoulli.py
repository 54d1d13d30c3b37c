"""
Tests for the Bernoulli numbers module.
"""

from fractions import Fraction

import pytest
from sympy import primerange

from congruences.bernoulli import (
    BernoulliTable,
    bernoulli_exact,
    bernoulli_mod_table,
    bp3_mod_p2,
    conv_sum,
    expected_sign,
    lemma2_sigma,
    reduce_exact_table,
    s_value,
    von_staudt_clausen_denominator,
    weighted_conv,
)
from congruences.exceptions import DomainError
from congruences.modring import embed, make_ring


EXPECTED = [
    Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30), Fraction(0),
    Fraction(1, 42), Fraction(0), Fraction(-1, 30), Fraction(0), Fraction(5, 66), Fraction(0),
    Fraction(-691, 2730),
]


@pytest.fixture(scope='module')
def bern():
    return bernoulli_exact(60)


def test_first_bernoulli_numbers():
    table = bernoulli_exact(12)
    assert isinstance(table, BernoulliTable)
    assert list(table.values) == EXPECTED
    assert table.max_index == 12
    assert len(table) == 13


def test_odd_bernoulli_numbers_vanish(bern):
    assert all(bern[n] == 0 for n in range(3, 61, 2))


def test_shorter_tables_are_prefixes(bern):
    assert bernoulli_exact(20).values == bern.values[:21]


def test_bernoulli_exact_bounds():
    with pytest.raises(DomainError):
        bernoulli_exact(-1)
    with pytest.raises(DomainError):
        bernoulli_exact(257)
    with pytest.raises(DomainError):
        bernoulli_exact(4).require(5)


@pytest.mark.parametrize("p, e, n, expected", [
    (7, 2, 4, 31),
    (7, 1, 4, 3),
    (11, 2, 6, 49),
    (11, 2, 8, 4),
    (13, 2, 10, 18),
])
def test_modular_bernoulli_values(p, e, n, expected):
    ring = make_ring(p, e)
    table = bernoulli_mod_table(ring, p - 2)
    assert table[n] == ring.residue(expected)


def test_modular_table_stops_before_p_minus_one():
    ring = make_ring(7, 2)
    with pytest.raises(DomainError):
        bernoulli_mod_table(ring, 6)
    table = bernoulli_mod_table(ring, 5)
    with pytest.raises(DomainError):
        table[6]


@pytest.mark.parametrize("p", list(primerange(5, 62)))
def test_modular_route_matches_exact_route(p, bern):
    for e in (1, 2):
        ring = make_ring(p, e)
        assert bernoulli_mod_table(ring, p - 2).values == reduce_exact_table(bern, ring).values


def test_reduce_modular_table():
    square = bernoulli_mod_table(make_ring(11, 2), 9)
    single = square.reduce(make_ring(11, 1))
    assert single.values == bernoulli_mod_table(make_ring(11, 1), 9).values
    with pytest.raises(DomainError):
        single.reduce(make_ring(11, 2))


@pytest.mark.parametrize("p", list(primerange(7, 98)))
def test_bp3_extraction(p, bern):
    assert bp3_mod_p2(p) == embed(bern[p - 3], make_ring(p, 2))


def test_bp3_known_value():
    assert bp3_mod_p2(7) == make_ring(7, 2).residue(31)
    with pytest.raises(DomainError):
        bp3_mod_p2(5)


@pytest.mark.parametrize("m, expected", [
    (0, Fraction(1)),
    (1, Fraction(-3, 2)),
    (2, Fraction(17, 12)),
    (3, Fraction(-5, 6)),
    (4, Fraction(7, 90)),
    (5, Fraction(7, 20)),
    (6, Fraction(-38, 315)),
])
def test_s_value(m, expected, bern):
    assert s_value(m, bern) == expected


def test_convolutions(bern):
    assert conv_sum(2, bern) == -1
    assert conv_sum(5, bern) == Fraction(-7, 180)
    assert weighted_conv(5, 6, bern) == Fraction(-7, 60)
    assert weighted_conv(4, 4, bern) == Fraction(-5, 6)
    assert weighted_conv(1, 2, bern) == 1
    with pytest.raises(DomainError):
        weighted_conv(3, 7, bern)
    with pytest.raises(DomainError):
        conv_sum(0, bern)


@pytest.mark.parametrize("m, expected", [
    (1, Fraction(-7, 4)),
    (3, Fraction(-137, 72)),
    (5, Fraction(-161, 1200)),
    (7, Fraction(1207, 4410)),
])
def test_lemma2_sigma(m, expected, bern):
    assert lemma2_sigma(m, bern) == expected


def test_lemma2_sigma_needs_odd_m(bern):
    with pytest.raises(DomainError):
        lemma2_sigma(4, bern)


@pytest.mark.parametrize("n", range(2, 61, 2))
def test_von_staudt_clausen(n, bern):
    assert von_staudt_clausen_denominator(n) == bern[n].denominator
    assert (1 if bern[n] > 0 else -1) == expected_sign(n)


def test_von_staudt_clausen_known():
    assert von_staudt_clausen_denominator(2) == 6
    assert von_staudt_clausen_denominator(4) == 30
    assert von_staudt_clausen_denominator(12) == 2730
    with pytest.raises(DomainError):
        von_staudt_clausen_denominator(3)


@pytest.mark.parametrize("m", range(5, 42, 2))
def test_s_value_at_odd_index(m):
    bern = bernoulli_exact(41)
    assert -Fraction(2, m + 1) * s_value(m, bern) == bern[m - 1] + Fraction(m, 2) * bern[m - 1]


def test_modular_table_require():
    table = bernoulli_mod_table(make_ring(7, 2), 5)
    table.require(5)
    with pytest.raises(DomainError):
        table.require(6)
    with pytest.raises(DomainError):
        table[6]
