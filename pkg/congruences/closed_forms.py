"""
Closed Forms Module

Right-hand sides of every harmonic-sum congruence, the Bernoulli constants
S(m), mu_m, nu_m and lambda_m they are built from, the recurrence that
derives the cubic sums from the linear and quadratic ones, and the catalog
of identity descriptors the verifier sweeps over.

Right sides are evaluated inside a ring from a table of Bernoulli residues
(RingConstants). The table can come from the in-ring recurrence or from the
exact table; for small primes both are evaluated and must agree.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple

from .bernoulli import (
    BernoulliTable,
    ModularBernoulliTable,
    bernoulli_exact,
    bernoulli_mod_table,
    bp3_mod_p2,
    conv_sum,
    reduce_exact_table,
    s_value,
)
from .conf import get_setting
from .exactmath import binomial
from .exceptions import ConsistencyError, DomainError
from .harmonic import (
    HarmonicTable,
    harmonic_table,
    reflection_sides,
    sum_pow_harmonic,
    sun_binomial_sides,
    triple_sum_ij4k,
)
from .modring import PrimePowerRing, Residue, embed, inv, make_ring, power_sum

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantCache:
    """Exact S(m) for m <= M, mu_m for odd m, nu_m and lambda_m for even m >= 2."""

    M: int
    s: Dict[int, Fraction]
    mu: Dict[int, Fraction]
    nu: Dict[int, Fraction]
    lam: Dict[int, Fraction]


def constant_cache(M: int, bern: Optional[BernoulliTable] = None) -> ConstantCache:
    """
    Compute the exact constants up to index M.

    mu_m     = -((m+2)/(2m)) S(m-1) + (1/4) sum_{r<m} B_r B_{m-1-r}
    nu_m     = -(2/(m+1)) S(m)
    lambda_m = (2/(m+1)) sum_{r<=m} [C(m+1,r)/(m+1-r)] B_r S(m-r) - ((m^2-m+6)/12) B_{m-2}

    Args:
        M: Largest index
        bern: Exact table covering 0..M, computed if omitted

    Returns:
        ConstantCache: The constants
    """
    if bern is None:
        bern = bernoulli_exact(M)
    bern.require(M)
    s = {m: s_value(m, bern) for m in range(M + 1)}
    mu = {}
    nu = {}
    lam = {}
    for m in range(1, M + 1):
        if m % 2:
            mu[m] = -Fraction(m + 2, 2 * m) * s[m - 1] + conv_sum(m, bern) / 4
        else:
            nu[m] = -Fraction(2, m + 1) * s[m]
            weighted = sum((Fraction(binomial(m + 1, r), m + 1 - r) * bern[r] * s[m - r]
                            for r in range(m + 1)), Fraction(0))
            lam[m] = Fraction(2, m + 1) * weighted - Fraction(m * m - m + 6, 12) * bern[m - 2]
    return ConstantCache(M, s, mu, nu, lam)


class RingConstants:
    """
    Bernoulli residues of one ring and the constants derived from them.

    Derived values are memoized on first use. A RingConstants built from a
    ConstantCache serves the cached exact constants (embedded) where they
    exist and derives the rest from the embedded Bernoulli values.
    """

    def __init__(self, bern: ModularBernoulliTable, seeds: Optional[ConstantCache] = None):
        self.ring = bern.ring
        self.bern = bern
        self.route = 'exact' if seeds is not None else 'modular'
        self._memo: Dict[Tuple[str, int], int] = {}
        if seeds is not None:
            for name in ('s', 'mu', 'nu', 'lam'):
                for m, value in getattr(seeds, name).items():
                    if m <= bern.max_index:
                        self._memo[(name, m)] = embed(value, self.ring).value

    @classmethod
    def from_exact(cls, bern: BernoulliTable, ring: PrimePowerRing, M: int) -> 'RingConstants':
        top = min(M, ring.p - 2, bern.max_index)
        return cls(reduce_exact_table(bern, ring), constant_cache(top, bern))

    def _cached(self, name: str, m: int, compute: Callable[[], int]) -> Residue:
        key = (name, m)
        if key not in self._memo:
            self._memo[key] = compute() % self.ring.modulus
        return Residue(self._memo[key], self.ring)

    def _inv(self, n: int) -> int:
        return self.ring.inv_int(n)

    def b(self, n: int) -> Residue:
        return self.bern[n]

    def s(self, m: int) -> Residue:
        """S(m) = sum_{r<=m} C(m+1, r) B_r B_{m-r}."""
        raw = self.bern.raw
        self.bern.require(m)
        return self._cached('s', m, lambda: sum(
            binomial(m + 1, r) * raw(r) * raw(m - r) for r in range(m + 1)))

    def conv(self, m: int) -> Residue:
        """sum_{r<m} B_r B_{m-1-r}."""
        raw = self.bern.raw
        self.bern.require(m - 1)
        return self._cached('conv', m, lambda: sum(raw(r) * raw(m - 1 - r) for r in range(m)))

    def wconv(self, m: int) -> Residue:
        """sum_{r<m} C(m+1, r) B_r B_{m-1-r}."""
        raw = self.bern.raw
        self.bern.require(m - 1)
        return self._cached('wconv', m, lambda: sum(
            binomial(m + 1, r) * raw(r) * raw(m - 1 - r) for r in range(m)))

    def a_sum(self, m: int) -> Residue:
        """sum_{r<=m} [C(m+1, r)/(m+1-r)] B_r S(m-r)."""
        raw = self.bern.raw
        return self._cached('a', m, lambda: sum(
            binomial(m + 1, r) * self._inv(m + 1 - r) * raw(r) * self.s(m - r).value
            for r in range(m + 1)))

    def mu(self, m: int) -> Residue:
        return self._cached('mu', m, lambda: (
            -(m + 2) * self._inv(2 * m) * self.s(m - 1).value
            + self._inv(4) * self.conv(m).value))

    def nu(self, m: int) -> Residue:
        return self._cached('nu', m, lambda: -2 * self._inv(m + 1) * self.s(m).value)

    def lam(self, m: int) -> Residue:
        return self._cached('lam', m, lambda: (
            2 * self._inv(m + 1) * self.a_sum(m).value
            - (m * m - m + 6) * self._inv(12) * self.bern.raw(m - 2)))


def _frac(ring: PrimePowerRing, numerator: int, denominator: int = 1) -> Residue:
    return embed(Fraction(numerator, denominator), ring)


def _require_m(m: int, p: int) -> None:
    if not 0 < m < p - 1:
        raise DomainError(f"m must satisfy 0 < m < p-1, got m={m}, p={p}")


# ---------------------------------------------------------------------------
# Right-hand sides
# ---------------------------------------------------------------------------

def rhs_t31(m: int, consts: RingConstants) -> Residue:
    """
    Closed form of sum_{k<p} k^m H_k modulo p^2: B_m - (p/(m+1)) S(m).

    Args:
        m: Exponent with 0 < m < p-1
        consts: Bernoulli constants over the mod-p^2 ring

    Returns:
        Residue: The right side
    """
    ring = consts.ring
    _require_m(m, ring.p)
    return consts.b(m) - ring.p * _frac(ring, 1, m + 1) * consts.s(m)


def rhs_t32(m: int, consts: RingConstants) -> Residue:
    """
    Closed form of sum_{k<p} k^m H_k^2 modulo p^2.

    m = 2 and m = 3 use their specialized constants; other odd m give
    B_{m-1} + p mu_m and other even m give nu_m + p lambda_m.

    Args:
        m: Exponent with 0 < m < p-1
        consts: Bernoulli constants over the mod-p^2 ring

    Returns:
        Residue: The right side
    """
    ring = consts.ring
    p = ring.p
    _require_m(m, p)
    if m == 2:
        return p * _frac(ring, 79, 108) - _frac(ring, 4, 9)
    if m == 3:
        return _frac(ring, 1, 6) - p * _frac(ring, 59, 144)
    if m % 2:
        return consts.b(m - 1) + p * consts.mu(m)
    return consts.nu(m) + p * consts.lam(m)


def rhs_t3_general(m: int, consts: RingConstants) -> Residue:
    """
    General quadratic congruence before specializing by parity.

    (2p/(m+1)) sum_r [C(m+1,r)/(m+1-r)] B_r S(m-r) + (p/(m+1)) sum_{r<m} C(m+1,r) B_r B_{m-1-r}
      - (2/(m+1)) S(m) - (m/2) B_{m-1}

    Args:
        m: Exponent with 0 < m < p-1
        consts: Bernoulli constants over the mod-p^2 ring

    Returns:
        Residue: The right side
    """
    ring = consts.ring
    p = ring.p
    _require_m(m, p)
    over = _frac(ring, 1, m + 1)
    return (2 * p * over * consts.a_sum(m)
            + p * over * consts.wconv(m)
            - 2 * over * consts.s(m)
            - _frac(ring, m, 2) * consts.b(m - 1))


def rhs_c2_c3(m: int, bern: ModularBernoulliTable, inverse: bool = False) -> Residue:
    """
    Mod-p values of the quadratic sums for odd m.

    Args:
        m: Odd exponent with 0 < m < p-1
        bern: Bernoulli residues over the mod-p ring
        inverse: False for sum k^m H_k^2 (gives B_{m-1}); True for
            sum H_k^2 / k^m (gives B_{p-2-m})

    Returns:
        Residue: The right side modulo p
    """
    p = bern.ring.p
    _require_m(m, p)
    if m % 2 == 0:
        raise DomainError(f"The mod-p quadratic forms need odd m, got {m}")
    return bern[p - 2 - m] if inverse else bern[m - 1]


def rhs_lemma3(m: int, bern: ModularBernoulliTable) -> Residue:
    """
    Mod-p value of sum_{k<p} H_k^2 / k^m for even m.

    -sum_{j=0}^{p-1-m} B_j B_{p-1-m-j} - sum_{j=p-m}^{p-2} B_j B_{2p-2-m-j}

    Args:
        m: Even exponent with 0 < m < p-1
        bern: Bernoulli residues over the mod-p ring

    Returns:
        Residue: The right side modulo p
    """
    ring = bern.ring
    p = ring.p
    _require_m(m, p)
    if m % 2:
        raise DomainError(f"The inverse-power quadratic form needs even m, got {m}")
    raw = bern.raw
    bern.require(p - 2)
    total = sum(raw(j) * raw(p - 1 - m - j) for j in range(p - m))
    total += sum(raw(j) * raw(2 * p - 2 - m - j) for j in range(p - m, p - 1))
    return ring.residue(-total)


def rhs_c5_c6_c7(m: int, bern: ModularBernoulliTable, inverse_quadratic: Residue,
                 bp3: Optional[Residue] = None) -> Residue:
    """
    Closed form of sum_{k<p} k^(p-m) H_k^2 modulo p^2 for even m.

    B_{p-1-m} - p [ ((m-1)/4) X + (1/4) sum_{r=p-m}^{p-2} B_r B_{2p-2-m-r} ]
    where X = sum H_k^2 / k^m modulo p. At m = 2 and m = 4 this collapses to
    B_{p-3} and B_{p-5}.

    Args:
        m: Even exponent, 0 < m <= p-3
        bern: Bernoulli residues over the mod-p^2 ring
        inverse_quadratic: X, the mod-p oracle value of sum H_k^2 / k^m
        bp3: B_{p-3} modulo p^2 from the power-sum extraction, used at m = 2

    Returns:
        Residue: The right side modulo p^2
    """
    ring = bern.ring
    p = ring.p
    if m % 2 or not 0 < m <= p - 3:
        raise DomainError(f"m must be even with 0 < m <= p-3, got m={m}, p={p}")
    if m == 2 and p > 5:
        return bp3 if bp3 is not None else bern[p - 3]
    if m == 4 and p > 7:
        return bern[p - 5]

    small = make_ring(p, 1)
    raw = bern.raw
    bern.require(p - 2)
    tail = sum(raw(r) * raw(2 * p - 2 - m - r) for r in range(p - m, p - 1))
    bracket = (_frac(small, m - 1, 4) * inverse_quadratic.reduce(small)
               + _frac(small, 1, 4) * small.residue(tail))
    return bern[p - 1 - m] - p * ring.residue(bracket.value)


def rhs_cubic(m: int, bp3: Residue) -> Residue:
    """
    Closed forms of sum_{k<p} k^m H_k^3 modulo p^2 for m = 0..3.

    Args:
        m: 0, 1, 2 or 3
        bp3: B_{p-3} modulo p^2 (the exact B_2 = 1/6 at p = 5)

    Returns:
        Residue: The right side
    """
    ring = bp3.ring
    p = ring.p
    if m == 0:
        return p * _frac(ring, 1, 3) * bp3 - 6 * p + 6
    if m == 1:
        return p * _frac(ring, 27, 8) - p * _frac(ring, 1, 6) * bp3 - 3
    if m == 2:
        return -p * _frac(ring, 365, 216) + p * _frac(ring, 1, 18) * bp3 + _frac(ring, 23, 18)
    if m == 3:
        return p * _frac(ring, 425, 576) - _frac(ring, 5, 12)
    raise DomainError(f"Cubic closed forms exist for m = 0..3, got {m}")


# ---------------------------------------------------------------------------
# Cubic recurrence and shift identity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CubicChain:
    """a_0..a_M with a_m = sum_{k<p} k^m H_k^3 modulo p^2, derived by recurrence."""

    ring: PrimePowerRing
    a: Tuple[int, ...]

    def __getitem__(self, m: int) -> Residue:
        return Residue(self.a[m], self.ring)


def cubic_chain(p: int, M: int, table: Optional[HarmonicTable] = None) -> CubicChain:
    """
    Derive the cubic sums from the linear and quadratic sums.

    m a_{m-1} = -sum_{i=2}^{m} C(m,i) a_{m-i} - 3 sum k^(m-1) H_k^2
                + 3 sum k^(m-2) H_k - sum k^(m-3),  m = 1..M+1

    Negative exponents at small m are inverse powers.

    Args:
        p: Prime > 3
        M: Largest index, at most p-3
        table: Harmonic table over the mod-p^2 ring

    Returns:
        CubicChain: a_0..a_M

    Raises:
        DomainError: If M is outside 0..p-3
    """
    if not 0 <= M <= p - 3:
        raise DomainError(f"The cubic chain needs 0 <= M <= p-3, got M={M}, p={p}")
    ring = make_ring(p, 2)
    if table is None:
        table = harmonic_table(ring)

    a = []
    for m in range(1, M + 2):
        total = ring.zero
        for i in range(2, m + 1):
            total += binomial(m, i) * ring.residue(a[m - i])
        total = (-total
                 - 3 * sum_pow_harmonic(m - 1, 2, ring, table)
                 + 3 * sum_pow_harmonic(m - 2, 1, ring, table)
                 - power_sum(m - 3, ring))
        a.append((total * inv(ring.residue(m))).value)
    return CubicChain(ring, tuple(a))


def shift_sides(m: int, n: int, table: HarmonicTable) -> Tuple[Residue, Residue]:
    """
    Both sides of sum_{k<p} (k+1)^m H_k^n = sum_{k<p} k^m H_{k-1}^n modulo p^2.

    Args:
        m: Non-negative exponent
        n: Power of the harmonic number, 1..3
        table: Harmonic table over the mod-p^2 ring

    Returns:
        Tuple of (left side, right side)
    """
    ring = table.ring
    if m < 0:
        raise DomainError(f"Shift exponent must be non-negative, got {m}")
    if n not in (1, 2, 3):
        raise DomainError(f"Shift power must be 1, 2 or 3, got {n}")
    modulus = ring.modulus
    h1 = table.h1
    left = sum(pow(k + 1, m, modulus) * pow(h1[k], n, modulus) for k in range(1, ring.p))
    right = sum(pow(k, m, modulus) * pow(h1[k - 1], n, modulus) for k in range(1, ring.p))
    return ring.residue(left), ring.residue(right)


def shift_check(p: int, m: int, n: int, table: Optional[HarmonicTable] = None) -> bool:
    """True iff the shift identity holds modulo p^2."""
    if table is None:
        table = harmonic_table(make_ring(p, 2))
    left, right = shift_sides(m, n, table)
    return left == right


# ---------------------------------------------------------------------------
# Per-prime evaluation context
# ---------------------------------------------------------------------------

@dataclass
class PrimeContext:
    """
    Tables shared by every descriptor evaluated at one prime.

    The tables are built once and only read afterwards; oracle sums are
    memoized per (m, n, e) because several identities share them.
    """

    p: int
    m_max: int
    rings: Dict[int, PrimePowerRing]
    tables: Dict[int, HarmonicTable]
    bern: Dict[int, ModularBernoulliTable]
    consts: RingConstants
    exact_consts: Optional[RingConstants]
    exact_limit: int
    _bp3: Any = None
    _chain: Optional[CubicChain] = None
    _sums: Dict[Tuple[int, int, int], Residue] = field(default_factory=dict)

    def oracle(self, m: int, n: int, e: int = 2) -> Residue:
        key = (m, n, e)
        if key not in self._sums:
            self._sums[key] = sum_pow_harmonic(m, n, self.rings[e], self.tables[e])
        return self._sums[key]

    @property
    def bp3(self) -> Residue:
        """B_{p-3} modulo p^2; exact B_2 = 1/6 at p = 5."""
        if self._bp3 is None:
            if self.p == 5:
                self._bp3 = embed(Fraction(1, 6), self.rings[2])
            else:
                try:
                    self._bp3 = bp3_mod_p2(self.p)
                except ConsistencyError as error:
                    logger.warning("B_(p-3) extraction failed at p=%d: %s", self.p, error)
                    self._bp3 = error
        if isinstance(self._bp3, ConsistencyError):
            raise self._bp3
        return self._bp3

    @property
    def chain(self) -> CubicChain:
        if self._chain is None:
            self._chain = cubic_chain(self.p, min(self.p - 3, self.m_max), self.tables[2])
        return self._chain

    def both_routes(self, evaluate: Callable[[RingConstants], Residue]) -> Residue:
        """
        Evaluate a right side from the modular route, cross-checked against the
        exact route when the prime is small enough to have one.

        Raises:
            ConsistencyError: If the two routes disagree
        """
        value = evaluate(self.consts)
        if self.exact_consts is not None:
            other = evaluate(self.exact_consts)
            if other != value:
                raise ConsistencyError(
                    f"exact and modular Bernoulli routes disagree: {other} vs {value}")
        return value


def prime_context(p: int, m_max: int, exact_limit: Optional[int] = None) -> PrimeContext:
    """
    Build the shared tables for one prime.

    Args:
        p: Prime > 3
        m_max: Largest m any descriptor will request
        exact_limit: Primes up to this value also get the exact-Bernoulli route

    Returns:
        PrimeContext: Rings mod p, p^2, p^3, their harmonic tables and the
        Bernoulli residues mod p and p^2
    """
    if exact_limit is None:
        exact_limit = get_setting('EXACT_ORACLE_MAX_PRIME')
    rings = {e: make_ring(p, e) for e in (1, 2, 3)}
    tables = {e: harmonic_table(ring) for e, ring in rings.items()}
    square = bernoulli_mod_table(rings[2], p - 2)
    bern = {2: square, 1: square.reduce(rings[1])}
    exact_consts = None
    if p <= exact_limit:
        exact_consts = RingConstants.from_exact(bernoulli_exact(p - 2), rings[2], m_max)
    logger.debug("Built tables for p=%d (exact route: %s)", p, exact_consts is not None)
    return PrimeContext(p, m_max, rings, tables, bern, RingConstants(square),
                        exact_consts, exact_limit)


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

Evaluator = Callable[[PrimeContext, Optional[int]], Any]


def _in_range(p: int, m: int) -> Optional[str]:
    return None if 0 < m < p - 1 else "0<m<p-1"


def _odd(p: int, m: int) -> Optional[str]:
    return "m odd" if m % 2 == 0 else _in_range(p, m)


def _even(p: int, m: int) -> Optional[str]:
    return "m even" if m % 2 else _in_range(p, m)


def _odd_not_3(p: int, m: int) -> Optional[str]:
    return "m!=3" if m == 3 else _odd(p, m)


def _even_not_2(p: int, m: int) -> Optional[str]:
    return "m!=2" if m == 2 else _even(p, m)


def _c5_domain(p: int, m: int) -> Optional[str]:
    if m % 2:
        return "m even"
    if m > p - 3:
        return "m<=p-3"
    return None


def _chain_domain(p: int, m: int) -> Optional[str]:
    return None if m <= p - 3 else "m<=p-3"


def _always(p: int, m: int) -> Optional[str]:
    return None


def _never(p: int, m: int) -> bool:
    return False


def _m_from_one(p: int, m_max: int) -> range:
    return range(1, m_max + 1)


def _m_from_zero(p: int, m_max: int) -> range:
    return range(0, m_max + 1)


def _k_range(p: int, m_max: int) -> range:
    return range(1, p)


def _bernoulli_indices(p: int, m_max: int) -> range:
    return range(0, p - 1)


@dataclass(frozen=True)
class IdentityDescriptor:
    """
    One catalog entry: where a congruence lives and how to evaluate its sides.

    parameter names the swept variable ('m', 'k' or 'n'); records carry its
    value in their m field. constraint returns the name of the violated
    hypothesis, or None when the pair (p, value) is valid. informational
    marks pairs whose outcome is recorded without being asserted.
    """

    id: str
    e: int
    provenance: str
    lhs: Evaluator
    rhs: Evaluator
    min_p: int = 5
    parameter: Optional[str] = None
    values: Callable[[int, int], range] = _m_from_one
    constraint: Callable[[int, int], Optional[str]] = _always
    informational: Callable[[int, int], bool] = _never
    needs_exact: bool = False


def _triple(ctx: PrimeContext, m: int, side: int) -> Tuple[Residue, ...]:
    return tuple(shift_sides(m, n, ctx.tables[2])[side] for n in (1, 2, 3))


def _build_catalog() -> Tuple[IdentityDescriptor, ...]:
    d = IdentityDescriptor
    return (
        d('WOLST_H1', 2, r"H_{p-1}\equiv 0\ \ (\mod p^2)",
          lambda c, m: c.tables[2].harmonic(c.p - 1),
          lambda c, m: c.rings[2].zero),
        d('WOLST_H2', 1, r"H_{p-1}^{(2)}\equiv 0\ \ (\mod p)",
          lambda c, m: c.tables[1].harmonic(c.p - 1, 2),
          lambda c, m: c.rings[1].zero),
        d('H2_LIFT', 2, r"H_{p-1}^{(2)}\equiv2/3pB_{p-3}(\mod p^2)",
          lambda c, m: c.tables[2].harmonic(c.p - 1, 2),
          lambda c, m: c.p * _frac(c.rings[2], 2, 3) * c.bp3),
        d('REFLECT_H', 1, r"H_{p-k}\equiv H_{k-1}\ \ (\mod p)",
          lambda c, k: reflection_sides(k, 1, c.tables[1])[0],
          lambda c, k: reflection_sides(k, 1, c.tables[1])[1],
          parameter='k', values=_k_range),
        d('REFLECT_HN', 1, r"H_{p-k}^{(n)}=H_{p-1}^{(n)}-\sum_{j=1}^{k-1}\frac{1}{(p-j)^n}\equiv (-1)^{n+1}H_{k-1}^{(n)}",
          lambda c, k: reflection_sides(k, 2, c.tables[1])[0],
          lambda c, k: reflection_sides(k, 2, c.tables[1])[1],
          parameter='k', values=_k_range),
        d('SUN_BINOM', 3, r"(-1)^k{p-1\choose k}\equiv 1-pH_k+\frac{p^2}{2}\left(H_k^2-H_k^{(2)}\right)",
          lambda c, k: sun_binomial_sides(k, c.tables[3])[0],
          lambda c, k: sun_binomial_sides(k, c.tables[3])[1],
          parameter='k', values=_k_range),
        d('SUM_H1', 2, r"\sum_{k=1}^{p-1}H_k\equiv1-p\ (\mod p^2)",
          lambda c, m: c.oracle(0, 1),
          lambda c, m: c.rings[2].residue(1 - c.p)),
        d('SUM_H2', 2, r"\sum_{k=1}^{p-1}H_k^2\equiv 2p-2\ \ (\mod p^2)",
          lambda c, m: c.oracle(0, 2),
          lambda c, m: c.rings[2].residue(2 * c.p - 2)),
        d('SUM_H2_NEG2X', 2, r"\sum_{k=1}^{p-1}H_k^2\equiv- 2\sum_{k=1}^{p-1}H_k(\mod p^2)",
          lambda c, m: c.oracle(0, 2),
          lambda c, m: -2 * c.oracle(0, 1)),
        d('T31', 2, r"\sum_{k=1}^{p-1}k^mH_k\equiv B_m-\frac{p}{m+1}S(m)(\mod p^2)",
          lambda c, m: c.oracle(m, 1),
          lambda c, m: c.both_routes(lambda k: rhs_t31(m, k)),
          parameter='m', constraint=_in_range),
        d('T3_GENERAL', 2, r"\frac{2p}{m+1}\sum_{r=0}^{m}\frac{{m+1\choose r}}{m+1-r}B_rS(m-r)",
          lambda c, m: c.oracle(m, 2),
          lambda c, m: c.both_routes(lambda k: rhs_t3_general(m, k)),
          parameter='m', constraint=_in_range),
        d('T32_M2', 2, r"\sum_{k=1}^{p-1}k^2H_k^2\equiv\frac{79}{108}p-\frac{4}{9}(\mod p^2)",
          lambda c, m: c.oracle(2, 2),
          lambda c, m: rhs_t32(2, c.consts)),
        d('T32_M3', 2, r"\sum_{k=1}^{p-1}k^3H_k^2\equiv-\frac{59}{144}p+\frac{1}{6}(\mod p^2)",
          lambda c, m: c.oracle(3, 2),
          lambda c, m: rhs_t32(3, c.consts)),
        d('T32_ODD', 2, r"B_{m-1}+p\mu_m",
          lambda c, m: c.oracle(m, 2),
          lambda c, m: c.both_routes(lambda k: rhs_t32(m, k)),
          parameter='m', constraint=_odd_not_3),
        d('T32_EVEN', 2, r"\nu_m+p\lambda_m",
          lambda c, m: c.oracle(m, 2),
          lambda c, m: c.both_routes(lambda k: rhs_t32(m, k)),
          parameter='m', constraint=_even_not_2),
        d('C_M1', 2, r"\sum_{k=1}^{p-1}kH_k^2\equiv -\frac{5}{4}p+1(\mod p^2)",
          lambda c, m: c.oracle(1, 2),
          lambda c, m: 1 - c.p * _frac(c.rings[2], 5, 4)),
        d('C_M4', 2, r"\sum_{k=1}^{p-1}k^4H_k^2\equiv \frac{5743}{27000}p-\frac{7}{225}",
          lambda c, m: c.oracle(4, 2),
          lambda c, m: c.p * _frac(c.rings[2], 5743, 27000) - _frac(c.rings[2], 7, 225),
          min_p=6),
        d('C_M5', 2, r"\sum_{k=1}^{p-1}k^5H_k^2\equiv -\frac{77}{1200}p- \frac{1}{30}(\mod p^2)",
          lambda c, m: c.oracle(5, 2),
          lambda c, m: -c.p * _frac(c.rings[2], 77, 1200) - _frac(c.rings[2], 1, 30),
          min_p=6),
        d('C2_MODP', 1, r"\sum_{k=1}^{p-1}k^mH_k^2\equiv B_{m-1} (\mod p)",
          lambda c, m: c.oracle(m, 2, 1),
          lambda c, m: rhs_c2_c3(m, c.bern[1]),
          parameter='m', constraint=_odd),
        d('C3_MODP', 1, r"\sum_{k=1}^{p-1}\frac{H_k^2}{k^m}\equiv B_{p-2-m} (\mod p)",
          lambda c, m: c.oracle(-m, 2, 1),
          lambda c, m: rhs_c2_c3(m, c.bern[1], inverse=True),
          parameter='m', constraint=_odd),
        d('LEMMA3', 1, r"\sum_{k=1}^{p-1}\frac{H_k^2}{k^m}\equiv-\sum_{j=0}^{p-1-m}B_jB_{p-1-m-j}",
          lambda c, m: c.oracle(-m, 2, 1),
          lambda c, m: rhs_lemma3(m, c.bern[1]),
          parameter='m', constraint=_even),
        d('C5', 2, r"\sum_{k=1}^{p-1}k^{p-m}H_k^2\equiv B_{p-1-m}-p\left(\frac{m-1}{4}",
          lambda c, m: c.oracle(c.p - m, 2),
          lambda c, m: rhs_c5_c6_c7(m, c.bern[2], c.oracle(-m, 2, 1)),
          min_p=6, parameter='m', constraint=_c5_domain,
          informational=lambda p, m: m == p - 3),
        d('C6', 2, r"\sum_{k=1}^{p-1}k^{p-2}H_k^2\equiv B_{p-3}(\mod p^2)",
          lambda c, m: c.oracle(c.p - 2, 2),
          lambda c, m: rhs_c5_c6_c7(2, c.bern[2], c.oracle(-2, 2, 1), c.bp3),
          min_p=6),
        d('C7', 2, r"\sum_{k=1}^{p-1}k^{p-4}H_k^2\equiv B_{p-5}(\mod p^2)",
          lambda c, m: c.oracle(c.p - 4, 2),
          lambda c, m: rhs_c5_c6_c7(4, c.bern[2], c.oracle(-4, 2, 1)),
          min_p=8),
        d('CUBIC_0', 2, r"\sum_{k=1}^{p-1}H_{k}^3\equiv \frac{1}{3}pB_{p-3}-6p+6(\mod p^2)",
          lambda c, m: c.oracle(0, 3),
          lambda c, m: rhs_cubic(0, c.bp3)),
        d('CUBIC_1', 2, r"\sum_{k=1}^{p-1}{kH_k^3}\equiv \frac{27}{8}p-\frac{1}{6}pB_{p-3}-3 (\mod p^2)",
          lambda c, m: c.oracle(1, 3),
          lambda c, m: rhs_cubic(1, c.bp3)),
        d('CUBIC_2', 2, r"\sum_{k=1}^{p-1}k^2H_k^3\equiv-\frac{365}{216}p+\frac{1}{18}pB_{p-3}+\frac{23}{18}",
          lambda c, m: c.oracle(2, 3),
          lambda c, m: rhs_cubic(2, c.bp3)),
        d('CUBIC_3', 2, r"\sum_{k=1}^{p-1}{k^3H_k^3}\equiv \frac{425}{576}p-\frac{5}{12} (\mod p^2)",
          lambda c, m: c.oracle(3, 3),
          lambda c, m: rhs_cubic(3, c.bp3)),
        d('R1_CHAIN', 2, r"a_{m-1}\equiv\frac{1}{m}\left(-\sum_{i=2}^{m}{m\choose i}a_{m-i}",
          lambda c, m: c.oracle(m, 3),
          lambda c, m: c.chain[m],
          parameter='m', values=_m_from_zero, constraint=_chain_domain),
        d('R2_SHIFT', 2, r"\sum_{k=1}^{p-1}(k+1)^mH_k^n\equiv\sum_{k=1}^{p-1}k^mH_{k-1}^n(\mod p^2)",
          lambda c, m: _triple(c, m, 0),
          lambda c, m: _triple(c, m, 1),
          parameter='m', values=_m_from_zero),
        d('HK_OVER_K', 2, r"\sum_{k=1}^{p-1}\frac{H_k}{k}=\frac{1}{2}\left(H_{p-1}^2+H_{p-1}^{(2)}\right)\equiv\frac{1}{2}H_{p-1}^{(2)}",
          lambda c, m: c.oracle(-1, 1),
          lambda c, m: _frac(c.rings[2], 1, 2) * c.tables[2].harmonic(c.p - 1, 2)),
        d('HOFFMAN_TRIPLE', 1, r"\sum_{1\leq i\leq j\leq k \leq p-1}\frac{1}{ij^4k}\equiv \frac{1}{3}B_{p-3}^2(\mod p)",
          lambda c, m: triple_sum_ij4k(c.rings[1], c.tables[1]),
          lambda c, m: _frac(c.rings[1], 1, 3) * c.bp3.reduce(c.rings[1]) ** 2,
          min_p=8),
        d('H2K2_ZERO', 1, r"\sum_{k=1}^{p-1}\frac{H_k^2}{k^2}\equiv 0(\mod p)",
          lambda c, m: c.oracle(-2, 2, 1),
          lambda c, m: c.rings[1].zero,
          min_p=6),
        d('HK_K5_ZERO', 1, r"\sum_{k=1}^{p-1}\frac{H_k}{k^5}\equiv\sum_{k=1}^{p-1}k^{p-6}H_k\equiv B_{p-6}=0(\mod p)",
          lambda c, m: c.oracle(-5, 1, 1),
          lambda c, m: c.rings[1].zero,
          min_p=8),
        d('BERN_ROUTES', 2, r"\sum_{k=0}^n{n+1\choose k}B_k=0(n=1,2,3,\cdots)",
          lambda c, n: c.consts.b(n),
          lambda c, n: c.exact_consts.b(n),
          parameter='n', values=_bernoulli_indices, needs_exact=True),
        d('BP3_EXTRACT', 2, r"\sum_{k=1}^{p-1}k^m=\frac{1}{m+1}\sum_{r=0}^{m}{m+1\choose r}B_rp^{m+1-r}",
          lambda c, m: c.bp3,
          lambda c, m: c.bern[2][c.p - 3],
          min_p=6),
    )


_CATALOG = _build_catalog()
_BY_ID = {descriptor.id: descriptor for descriptor in _CATALOG}


def catalog() -> Tuple[IdentityDescriptor, ...]:
    """Every identity descriptor, in catalog order."""
    return _CATALOG


def lookup(identity_id: str) -> IdentityDescriptor:
    """
    Find a descriptor by id.

    Raises:
        KeyError: If no descriptor has that id
    """
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"Unknown identity: {identity_id}") from None
