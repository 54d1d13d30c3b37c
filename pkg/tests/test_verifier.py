"""
Tests for the verifier: prime ranges, sweeps, and the exact suite.
"""

from unittest.mock import patch

import pytest
from django.test import override_settings

from congruences.closed_forms import catalog
from congruences.exceptions import ConsistencyError, DomainError
from congruences.modring import make_ring
from congruences.reporting import render_json
from congruences.verifier import (
    DIFFERS,
    HOLDS,
    SweepConfig,
    VerificationRecord,
    parse_pair,
    primes_in,
    run,
    run_exact_suite,
    serialize,
)


def by_id(report, identifier):
    return [record for record in report.records if record.id == identifier]


@pytest.mark.parametrize("lo, hi, expected", [
    (5, 20, [5, 7, 11, 13, 17, 19]),
    (24, 28, []),
    (5, 5, [5]),
])
def test_primes_in(lo, hi, expected):
    assert primes_in(lo, hi) == expected


@pytest.mark.parametrize("lo, hi", [(3, 10), (10, 5), (5, 10 ** 6 + 1)])
def test_primes_in_rejects_bounds(lo, hi):
    with pytest.raises(DomainError):
        primes_in(lo, hi)


def test_parse_pair():
    assert parse_pair('5:199', '--primes') == (5, 199)
    assert parse_pair('7', '--mod', default_second=1) == (7, 1)
    with pytest.raises(DomainError):
        parse_pair('5-199', '--primes')
    with pytest.raises(DomainError):
        parse_pair('a:b', '--primes')


@pytest.mark.parametrize("kwargs", [
    {'prime_lo': 3, 'prime_hi': 10},
    {'prime_lo': 11, 'prime_hi': 7},
    {'prime_lo': 5, 'prime_hi': 7, 'm_max': 0},
    {'prime_lo': 5, 'prime_hi': 7, 'workers': 0},
    {'prime_lo': 5, 'prime_hi': 7, 'format': 'xml'},
    {'prime_lo': 5, 'prime_hi': 7, 'identities': ('T31', 'NOPE')},
])
def test_sweep_config_validation(kwargs):
    with pytest.raises(DomainError):
        SweepConfig(**kwargs)


def test_wolstenholme_sweep():
    report = run(SweepConfig(5, 31, identities=('WOLST_H1',)))
    assert len(report.records) == 9
    assert all(record.status == 'pass' for record in report.records)
    assert report.records[0].lhs == "0 mod 25"


def test_cubic_record_at_five():
    report = run(SweepConfig(5, 5, identities=('CUBIC_0',)))
    (record,) = report.records
    assert record.lhs == record.rhs == "11 mod 25"
    assert record.status == 'pass'
    assert record.reason is None


def test_t31_records():
    report = run(SweepConfig(7, 7, identities=('T31',), m_max=4))
    assert [record.m for record in report.records] == [1, 2, 3, 4]
    assert all(record.status == 'pass' for record in report.records)
    assert report.records[1].lhs == "20 mod 49"


def test_out_of_domain_pairs_are_skipped():
    report = run(SweepConfig(5, 5, identities=('T31',), m_max=5))
    statuses = {record.m: (record.status, record.reason) for record in report.records}
    assert statuses[3] == ('pass', None)
    assert statuses[4] == ('skip', "0<m<p-1")
    assert statuses[5] == ('skip', "0<m<p-1")


def test_parity_constraints():
    report = run(SweepConfig(13, 13, identities=('T32_ODD', 'T32_EVEN'), m_max=6))
    odd = {record.m: record for record in by_id(report, 'T32_ODD')}
    even = {record.m: record for record in by_id(report, 'T32_EVEN')}
    assert odd[3].reason == "m!=3"
    assert odd[2].reason == "m odd"
    assert odd[5].status == 'pass'
    assert even[2].reason == "m!=2"
    assert even[4].status == 'pass'


def test_c5_at_p_minus_three_is_informational():
    report = run(SweepConfig(7, 7, identities=('C5',), m_max=4))
    records = {record.m: record for record in report.records}
    assert records[2].status == 'pass'
    assert records[4].status == 'info'
    assert records[4].reason in (HOLDS, DIFFERS)
    assert not report.failed


def test_triple_sum_starts_above_seven():
    report = run(SweepConfig(7, 11, identities=('HOFFMAN_TRIPLE',)))
    assert [record.status for record in report.records] == ['skip', 'pass']


def test_bernoulli_routes_skip_large_primes():
    report = run(SweepConfig(97, 101, identities=('BERN_ROUTES',)))
    at_97 = [record for record in report.records if record.p == 97]
    at_101 = [record for record in report.records if record.p == 101]
    assert len(at_97) == 96
    assert all(record.status == 'pass' for record in at_97)
    assert [(record.status, record.reason) for record in at_101] == [('skip', "p>97")]


def test_reflection_ranges_over_k():
    report = run(SweepConfig(11, 11, identities=('REFLECT_H',), m_max=2))
    assert [record.m for record in report.records] == list(range(1, 11))


def test_shift_records_hold_triples():
    report = run(SweepConfig(7, 7, identities=('R2_SHIFT',), m_max=3))
    assert [record.m for record in report.records] == [0, 1, 2, 3]
    assert report.records[0].lhs.startswith('[')
    assert report.records[0].lhs.endswith('] mod 49')
    assert all(record.status == 'pass' for record in report.records)


def test_extraction_failure_becomes_a_fail_record():
    with patch('congruences.closed_forms.bp3_mod_p2', side_effect=ConsistencyError('not divisible')):
        report = run(SweepConfig(11, 11, identities=('H2_LIFT', 'WOLST_H1')))
    h2_lift = by_id(report, 'H2_LIFT')[0]
    assert h2_lift.status == 'fail'
    assert 'not divisible' in h2_lift.reason
    assert by_id(report, 'WOLST_H1')[0].status == 'pass'
    assert report.failed


def test_full_catalog_small_sweep():
    report = run(SweepConfig(5, 41, m_max=8))
    failures = [record for record in report.records if record.status == 'fail']
    assert failures == []
    assert {record.id for record in report.records} == {d.id for d in catalog()}


def test_records_are_sorted():
    report = run(SweepConfig(5, 13, identities=('T31', 'SUM_H1'), m_max=3))
    keys = [record.sort_key() for record in report.records]
    assert keys == sorted(keys)


def test_output_does_not_depend_on_worker_count():
    identities = ('T31', 'T32_EVEN', 'CUBIC_1', 'R1_CHAIN')
    serial = run(SweepConfig(5, 43, identities=identities, m_max=6, workers=1))
    parallel = run(SweepConfig(5, 43, identities=identities, m_max=6, workers=3))
    assert render_json(serial) == render_json(parallel)


def test_serialize():
    ring = make_ring(7, 2)
    assert serialize(ring.residue(20)) == "20 mod 49"
    assert serialize((ring.residue(1), ring.residue(2), ring.residue(3))) == "[1, 2, 3] mod 49"


def test_record_dict_field_order():
    record = VerificationRecord('T31', 7, 2, "20 mod 49", "20 mod 49", 'pass')
    assert list(record.as_dict()) == ['id', 'p', 'm', 'lhs', 'rhs', 'status', 'reason']


def test_exact_suite():
    report = run_exact_suite(9, vsc_max=20)
    assert not report.failed
    assert len(by_id(report, 'LEMMA1_EXACT')) == 8 * 12
    lemma2 = {record.m: record for record in by_id(report, 'LEMMA2_EXACT')}
    assert lemma2[3].status == 'info'
    assert lemma2[3].reason == DIFFERS
    assert lemma2[5].status == 'pass'
    assert lemma2[5].p is None
    l8 = {record.m: record for record in by_id(report, 'L8_EXACT')}
    assert l8[3].reason == DIFFERS
    assert l8[1].status == 'pass'
    assert [record.m for record in by_id(report, 'DILCHER_EXACT')] == [4, 6, 8]
    vsc = {record.m: record for record in by_id(report, 'VSC_DENOMINATOR')}
    assert vsc[12].lhs == vsc[12].rhs == "2730"
    assert len(by_id(report, 'BERNOULLI_SIGN')) == 10


def test_exact_suite_serializes_fractions():
    report = run_exact_suite(3, vsc_max=2)
    record = by_id(report, 'LEMMA1_EXACT')[0]
    assert record.p == 2 and record.m == 1
    assert record.lhs == record.rhs == "1/1"


def test_c5_skip_names_the_p_minus_three_bound():
    report = run(SweepConfig(7, 7, identities=('C5',), m_max=6))
    records = {record.m: record for record in report.records}
    assert records[5].reason == "m even"
    assert records[6].status == 'skip'
    assert records[6].reason == "m<=p-3"


def test_sweep_config_rejects_primes_above_ring_cap():
    with pytest.raises(DomainError, match="RING_PRIME_CAP"):
        SweepConfig(5, 10_007)
    with override_settings(HARMONIC_VERIFIER={'RING_PRIME_CAP': 50}):
        SweepConfig(5, 50)
        with pytest.raises(DomainError):
            SweepConfig(5, 53)
