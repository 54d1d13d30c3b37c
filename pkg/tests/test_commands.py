"""
Tests for the management commands and the settings layer.
"""

import json
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from io import StringIO
from unittest.mock import patch

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import override_settings

from congruences.conf import DEFAULTS, get_setting
from congruences.verifier import VerificationRecord, VerificationReport


def test_oracle_command():
    out = StringIO()
    call_command('oracle', p=7, e=2, m=2, n=1, stdout=out)
    assert out.getvalue() == "20 mod 49\n"


def test_oracle_command_rejects_composite():
    with pytest.raises(CommandError) as info:
        call_command('oracle', p=9, e=2, m=2, n=1, stdout=StringIO())
    assert info.value.returncode == 2


def test_bernoulli_command_exact():
    out = StringIO()
    call_command('bernoulli', max_index=4, stdout=out)
    assert out.getvalue().splitlines() == ["B_0 = 1/1", "B_1 = -1/2", "B_2 = 1/6", "B_3 = 0/1", "B_4 = -1/30"]


def test_bernoulli_command_modular():
    out = StringIO()
    call_command('bernoulli', max_index=5, mod='7:2', stdout=out)
    assert out.getvalue().splitlines()[4] == "B_4 = 31 mod 49"


def test_bernoulli_command_index_too_large():
    with pytest.raises(CommandError) as info:
        call_command('bernoulli', max_index=6, mod='7', stdout=StringIO())
    assert info.value.returncode == 2


def test_verify_command_json():
    out = StringIO()
    call_command('verify', primes='7:7', identities='T31', m_max=4, format='json', stdout=out)
    lines = [json.loads(line) for line in out.getvalue().splitlines()]
    assert [line['m'] for line in lines] == [1, 2, 3, 4]
    assert lines[1]['lhs'] == "20 mod 49"
    assert all(line['status'] == 'pass' for line in lines)


def test_verify_command_writes_file(tmp_path):
    path = tmp_path / 'wolstenholme.csv'
    call_command('verify', primes='5:13', identities='WOLST_H1,WOLST_H2', format='csv',
                 out=str(path), stdout=StringIO())
    lines = path.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'id,p,m,lhs,rhs,status,reason'
    assert len(lines) == 1 + 2 * 4


@pytest.mark.parametrize("options", [
    {'primes': '3:10'},
    {'primes': 'five'},
    {'primes': '5:7', 'identities': 'NOPE'},
    {'primes': '5:7', 'm_max': 0},
])
def test_verify_command_usage_errors(options):
    with pytest.raises(CommandError) as info:
        call_command('verify', stdout=StringIO(), **options)
    assert info.value.returncode == 2


def test_verify_command_failure_exit_code():
    report = VerificationReport.from_records([
        VerificationRecord('WOLST_H1', 5, None, "1 mod 25", "0 mod 25", 'fail', "lhs != rhs"),
    ])
    out = StringIO()
    with patch('congruences.management.commands.verify.run', return_value=report):
        with pytest.raises(CommandError) as info:
            call_command('verify', primes='5:5', format='json', stdout=out)
    assert info.value.returncode == 1
    # the report is still written
    assert '"status":"fail"' in out.getvalue()


def test_exact_identities_command():
    out = StringIO()
    call_command('exact-identities', m_max=5, format='json', stdout=out)
    records = [json.loads(line) for line in out.getvalue().splitlines()]
    assert {record['status'] for record in records} == {'pass', 'info'}
    info = [record for record in records if record['status'] == 'info']
    assert {(record['id'], record['m']) for record in info} == {('LEMMA2_EXACT', 3), ('L8_EXACT', 3)}


def test_settings_override_defaults():
    assert get_setting('DEFAULT_M_MAX') == 12
    with override_settings(HARMONIC_VERIFIER={'DEFAULT_M_MAX': 5}):
        assert get_setting('DEFAULT_M_MAX') == 5
        assert get_setting('VSC_MAX_INDEX') == DEFAULTS['VSC_MAX_INDEX']
    with pytest.raises(KeyError):
        get_setting('NOT_A_SETTING')


def test_verify_command_rejects_primes_above_ring_cap():
    with pytest.raises(CommandError) as info:
        call_command('verify', primes='10007:10007', identities='WOLST_H1', stdout=StringIO())
    assert info.value.returncode == 2


def test_spawned_worker_reads_settings_module(tmp_path, monkeypatch):
    (tmp_path / 'capped_settings.py').write_text(
        "SECRET_KEY = 'test'\nHARMONIC_VERIFIER = {'RING_PRIME_CAP': 97}\n")
    monkeypatch.syspath_prepend(str(tmp_path))
    monkeypatch.setenv('DJANGO_SETTINGS_MODULE', 'capped_settings')
    with ProcessPoolExecutor(max_workers=1, mp_context=multiprocessing.get_context('spawn')) as pool:
        assert pool.submit(get_setting, 'RING_PRIME_CAP').result() == 97
