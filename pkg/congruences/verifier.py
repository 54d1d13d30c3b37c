"""
Verifier Module

Sweeps the identity catalog over a range of primes. Each prime gets one
PrimeContext whose tables every selected descriptor reads; each valid
(descriptor, prime, parameter) triple becomes one VerificationRecord.
Records are sorted by (id, p, m) so the report does not depend on how the
work was split across processes.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import repeat
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from sympy import primerange

from .bernoulli import bernoulli_exact, expected_sign, von_staudt_clausen_denominator
from .closed_forms import IdentityDescriptor, PrimeContext, catalog, lookup, prime_context
from .conf import get_setting
from .exactmath import (
    as_fraction_string,
    dilcher_sides,
    l8_sides,
    lemma1_rhs_exact,
    lemma2_sides,
    sum_pow_harmonic_exact,
)
from .exceptions import CongruenceError, DomainError
from .modring import Residue

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'
INFO = 'info'
STATUSES = (PASS, FAIL, SKIP, INFO)
FORMATS = ('text', 'json', 'csv')

HOLDS = "informational: congruence holds"
DIFFERS = "informational: congruence differs"


@dataclass(frozen=True)
class SweepConfig:
    """
    One verification run: which primes, which identities, and how.

    identities is either 'all' or a sequence of catalog ids.
    """

    prime_lo: int
    prime_hi: int
    identities: Union[str, Tuple[str, ...]] = 'all'
    m_max: int = 12
    workers: int = 1
    format: str = 'text'
    out: Optional[str] = None

    def __post_init__(self):
        if self.prime_lo < 5:
            raise DomainError(f"prime_lo must be at least 5, got {self.prime_lo}")
        if self.prime_hi < self.prime_lo:
            raise DomainError(f"Empty prime range {self.prime_lo}:{self.prime_hi}")
        cap = get_setting('RING_PRIME_CAP')
        if self.prime_hi > cap:
            raise DomainError(f"prime_hi {self.prime_hi} exceeds RING_PRIME_CAP {cap}")
        if self.m_max < 1:
            raise DomainError(f"m_max must be at least 1, got {self.m_max}")
        if self.workers < 1:
            raise DomainError(f"workers must be positive, got {self.workers}")
        if self.format not in FORMATS:
            raise DomainError(f"Unknown format {self.format!r}; expected one of {', '.join(FORMATS)}")
        if self.identities != 'all':
            object.__setattr__(self, 'identities', tuple(self.identities))
            self.descriptors()

    def descriptors(self) -> Tuple[IdentityDescriptor, ...]:
        """
        Raises:
            DomainError: If an identity id is not in the catalog
        """
        if self.identities == 'all':
            return catalog()
        try:
            return tuple(lookup(identity) for identity in self.identities)
        except KeyError as error:
            raise DomainError(error.args[0]) from None


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one identity at one (p, m)."""

    id: str
    p: Optional[int]
    m: Optional[int]
    lhs: str
    rhs: str
    status: str
    reason: Optional[str] = None
    elapsed: float = field(default=0.0, compare=False)

    def sort_key(self) -> Tuple[str, int, int]:
        return (self.id,
                -1 if self.p is None else self.p,
                -1 if self.m is None else self.m)

    def as_dict(self) -> Dict[str, Any]:
        """The serialized fields, in output order."""
        return {
            'id': self.id,
            'p': self.p,
            'm': self.m,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'status': self.status,
            'reason': self.reason,
        }


@dataclass(frozen=True)
class VerificationReport:
    records: Tuple[VerificationRecord, ...]
    elapsed: float = 0.0

    @classmethod
    def from_records(cls, records: Sequence[VerificationRecord], elapsed: float = 0.0) -> 'VerificationReport':
        return cls(tuple(sorted(records, key=VerificationRecord.sort_key)), elapsed)

    @property
    def summary(self) -> Dict[str, Dict[str, int]]:
        from .reporting import summarize
        return summarize(self.records)

    @property
    def failed(self) -> bool:
        return any(record.status == FAIL for record in self.records)


def serialize(value: Any) -> str:
    """
    Canonical string for a side of an identity.

    Residues print as "v mod N", residue tuples as "[a, b, c] mod N" and
    exact rationals as "a/b".
    """
    if isinstance(value, Residue):
        return str(value)
    if isinstance(value, tuple) and value and all(isinstance(v, Residue) for v in value):
        inner = ', '.join(str(v.value) for v in value)
        return f"[{inner}] mod {value[0].ring.modulus}"
    if isinstance(value, Fraction):
        return as_fraction_string(value)
    return str(value)


def primes_in(lo: int, hi: int) -> List[int]:
    """
    Primes p with lo <= p <= hi, ascending.

    Args:
        lo: Lower bound, at least 5
        hi: Upper bound, at most PRIME_RANGE_CAP

    Returns:
        List of primes

    Raises:
        DomainError: If the bounds are out of order or outside 5..PRIME_RANGE_CAP
    """
    cap = get_setting('PRIME_RANGE_CAP')
    if not 5 <= lo <= hi <= cap:
        raise DomainError(f"Prime range must satisfy 5 <= lo <= hi <= {cap}, got {lo}:{hi}")
    return list(primerange(lo, hi + 1))


def parse_pair(text: str, label: str, default_second: Optional[int] = None) -> Tuple[int, int]:
    """
    Parse "A:B" (or "A" when default_second is given) into two integers.

    Raises:
        DomainError: If the text is not of that shape
    """
    first, sep, second = text.partition(':')
    try:
        if not sep:
            if default_second is None:
                raise ValueError(text)
            return int(first), default_second
        return int(first), int(second)
    except ValueError:
        raise DomainError(f"{label} must look like A:B, got {text!r}") from None


def _judge(identifier: str, p: Optional[int], m: Optional[int], lhs: Any, rhs: Any,
           informational: bool, started: float) -> VerificationRecord:
    holds = lhs == rhs
    if informational:
        status, reason = INFO, HOLDS if holds else DIFFERS
    elif holds:
        status, reason = PASS, None
    else:
        status, reason = FAIL, "lhs != rhs"
    return VerificationRecord(identifier, p, m, serialize(lhs), serialize(rhs), status, reason,
                              time.perf_counter() - started)


def evaluate(descriptor: IdentityDescriptor, ctx: PrimeContext, m: Optional[int] = None,
             informational: bool = False) -> VerificationRecord:
    """
    Evaluate both sides of one descriptor at one parameter value.

    Library errors become fail records carrying the error text.
    """
    started = time.perf_counter()
    try:
        lhs = descriptor.lhs(ctx, m)
        rhs = descriptor.rhs(ctx, m)
    except CongruenceError as error:
        return VerificationRecord(descriptor.id, ctx.p, m, '', '', FAIL, str(error),
                                  time.perf_counter() - started)
    return _judge(descriptor.id, ctx.p, m, lhs, rhs, informational, started)


def _skip(descriptor: IdentityDescriptor, p: int, m: Optional[int], reason: str) -> VerificationRecord:
    return VerificationRecord(descriptor.id, p, m, '', '', SKIP, reason)


def records_for_descriptor(descriptor: IdentityDescriptor, ctx: PrimeContext) -> List[VerificationRecord]:
    """Every record one descriptor produces at the context's prime."""
    p = ctx.p
    if p < descriptor.min_p:
        return [_skip(descriptor, p, None, f"p>{descriptor.min_p - 1}")]
    if descriptor.needs_exact and ctx.exact_consts is None:
        return [_skip(descriptor, p, None, f"p>{ctx.exact_limit}")]
    if descriptor.parameter is None:
        return [evaluate(descriptor, ctx)]

    records = []
    for value in descriptor.values(p, ctx.m_max):
        violated = descriptor.constraint(p, value)
        if violated:
            records.append(_skip(descriptor, p, value, violated))
        else:
            records.append(evaluate(descriptor, ctx, value, descriptor.informational(p, value)))
    return records


def records_for_prime(p: int, identities: Sequence[str], m_max: int,
                      exact_limit: int) -> List[VerificationRecord]:
    """
    Build the prime's shared tables once and evaluate the selected descriptors.

    Takes ids rather than descriptors so it can run in a worker process.
    """
    descriptors = [lookup(identity) for identity in identities]
    try:
        ctx = prime_context(p, m_max, exact_limit)
    except CongruenceError as error:
        logger.warning("Could not build tables for p=%d: %s", p, error)
        return [VerificationRecord(d.id, p, None, '', '', FAIL, str(error)) for d in descriptors]

    records = []
    for descriptor in descriptors:
        records.extend(records_for_descriptor(descriptor, ctx))
    logger.debug("p=%d produced %d records", p, len(records))
    return records


def _log_outcome(report: VerificationReport) -> None:
    counts = {status: 0 for status in STATUSES}
    for record in report.records:
        counts[record.status] += 1
        if record.status == FAIL:
            logger.warning("FAIL %s p=%s m=%s: %s", record.id, record.p, record.m, record.reason)
    logger.info("Sweep finished in %.2fs: %s", report.elapsed,
                ', '.join(f"{count} {status}" for status, count in counts.items()))


def run(config: SweepConfig) -> VerificationReport:
    """
    Run a sweep.

    Args:
        config: The sweep to run

    Returns:
        VerificationReport: Sorted records; identical for any worker count
    """
    started = time.perf_counter()
    primes = primes_in(config.prime_lo, config.prime_hi)
    identities = [descriptor.id for descriptor in config.descriptors()]
    exact_limit = get_setting('EXACT_ORACLE_MAX_PRIME')
    logger.info("Verifying %d identities over %d primes with %d worker(s)",
                len(identities), len(primes), config.workers)

    records: List[VerificationRecord] = []
    if config.workers > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            for chunk in executor.map(records_for_prime, primes, repeat(identities),
                                      repeat(config.m_max), repeat(exact_limit)):
                records.extend(chunk)
    else:
        for p in primes:
            records.extend(records_for_prime(p, identities, config.m_max, exact_limit))

    report = VerificationReport.from_records(records, time.perf_counter() - started)
    _log_outcome(report)
    return report


# ---------------------------------------------------------------------------
# Exact identities (no modulus)
# ---------------------------------------------------------------------------

LEMMA1_M_MAX = 8
LEMMA1_P_MAX = 13


def _exact_record(identifier: str, p: Optional[int], m: int, compute,
                  informational: bool = False) -> VerificationRecord:
    started = time.perf_counter()
    try:
        lhs, rhs = compute()
    except CongruenceError as error:
        return VerificationRecord(identifier, p, m, '', '', FAIL, str(error),
                                  time.perf_counter() - started)
    return _judge(identifier, p, m, lhs, rhs, informational, started)


def run_exact_suite(m_max: Optional[int] = None, vsc_max: Optional[int] = None) -> VerificationReport:
    """
    Check the exact Bernoulli and harmonic identities over the rationals.

    Covers the closed form for sum k^m H_k with m <= min(m_max, 8) and
    p = 2..13, the triple-product and weighted convolution identities for odd
    m <= m_max (both recorded as informational at m = 3), the even-index
    convolution identity for even n in 4..m_max, and the denominator and sign
    of B_n for even n <= vsc_max.

    Args:
        m_max: Largest m or n, EXACT_SUITE_M_MAX by default
        vsc_max: Largest index for the denominator and sign checks, VSC_MAX_INDEX by default

    Returns:
        VerificationReport: Sorted records with exact values as a/b
    """
    if m_max is None:
        m_max = get_setting('EXACT_SUITE_M_MAX')
    if vsc_max is None:
        vsc_max = get_setting('VSC_MAX_INDEX')
    if m_max < 1:
        raise DomainError(f"m_max must be at least 1, got {m_max}")

    started = time.perf_counter()
    bern = bernoulli_exact(max(m_max, vsc_max, 1))
    records = []

    for m in range(1, min(m_max, LEMMA1_M_MAX) + 1):
        for p in range(2, LEMMA1_P_MAX + 1):
            records.append(_exact_record('LEMMA1_EXACT', p, m, lambda: (
                sum_pow_harmonic_exact(m, 1, p), lemma1_rhs_exact(m, p, bern))))

    for m in range(1, m_max + 1, 2):
        records.append(_exact_record('LEMMA2_EXACT', None, m, lambda: lemma2_sides(m, bern),
                                     informational=m == 3))
        records.append(_exact_record('L8_EXACT', None, m, lambda: l8_sides(m, bern),
                                     informational=m == 3))

    for n in range(4, m_max + 1, 2):
        records.append(_exact_record('DILCHER_EXACT', None, n, lambda: dilcher_sides(n, bern)))

    for n in range(2, vsc_max + 1, 2):
        records.append(_exact_record('VSC_DENOMINATOR', None, n, lambda: (
            bern[n].denominator, von_staudt_clausen_denominator(n))))
        records.append(_exact_record('BERNOULLI_SIGN', None, n, lambda: (
            1 if bern[n] > 0 else -1, expected_sign(n))))

    report = VerificationReport.from_records(records, time.perf_counter() - started)
    _log_outcome(report)
    return report
