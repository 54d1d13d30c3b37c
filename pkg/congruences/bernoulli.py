"""
Bernoulli Numbers Module

Exact Bernoulli numbers from the defining recurrence, their reductions into
prime-power rings, and the Bernoulli convolution constants that the closed
forms are built from: S(m), plain and binomially weighted convolutions, and
the triple-product double sum.

Two independent routes produce modular Bernoulli values: reducing the exact
table, and running the recurrence directly inside the ring. The verifier
compares them.
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import List, Tuple

from sympy import divisors, isprime

from .conf import get_setting
from .exactmath import binomial, binomial_row
from .exceptions import ConsistencyError, DomainError
from .modring import PrimePowerRing, Residue, embed, make_ring, power_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_M as exact fractions, with B_1 = -1/2."""

    values: Tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def require(self, n: int) -> None:
        """
        Raises:
            DomainError: If the table does not reach index n
        """
        if n > self.max_index:
            raise DomainError(f"Bernoulli table covers 0..{self.max_index}, index {n} requested")


@dataclass(frozen=True)
class ModularBernoulliTable:
    """B_0..B_N reduced into a ring; N <= p-2 since B_{p-1} is not p-integral."""

    ring: PrimePowerRing
    values: Tuple[int, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def require(self, n: int) -> None:
        """Raise DomainError unless B_n is in the table."""
        if n > self.max_index:
            raise DomainError(f"Modular Bernoulli table covers 0..{self.max_index}, index {n} requested")

    def __getitem__(self, n: int) -> Residue:
        self.require(n)
        return Residue(self.values[n], self.ring)

    def raw(self, n: int) -> int:
        """Integer representative of B_n, for hot loops."""
        return self.values[n]

    def reduce(self, target: PrimePowerRing) -> 'ModularBernoulliTable':
        """The same table reduced into a ring with a smaller exponent."""
        if target.p != self.ring.p or target.e > self.ring.e:
            raise DomainError(f"Cannot reduce a table over {self.ring} into {target}")
        return ModularBernoulliTable(target, tuple(v % target.modulus for v in self.values))


_exact_values: List[Fraction] = [Fraction(1)]
_exact_lock = threading.Lock()


def bernoulli_exact(M: int) -> BernoulliTable:
    """
    Exact Bernoulli numbers B_0..B_M.

    Uses B_n = -(1/(n+1)) * sum_{k<n} C(n+1, k) B_k. Values computed once are
    shared by later calls.

    Args:
        M: Largest index, at most BERNOULLI_MAX_INDEX

    Returns:
        BernoulliTable: B_0..B_M

    Raises:
        DomainError: If M is negative or exceeds the cap
    """
    cap = get_setting('BERNOULLI_MAX_INDEX')
    if M < 0:
        raise DomainError(f"Bernoulli index must be non-negative, got {M}")
    if M > cap:
        raise DomainError(f"Bernoulli index {M} exceeds the cap of {cap}")

    if M >= len(_exact_values):
        with _exact_lock:
            for n in range(len(_exact_values), M + 1):
                row = binomial_row(n + 1)
                total = Fraction(0)
                for k in range(n):
                    if k > 1 and k % 2:
                        continue
                    total += row[k] * _exact_values[k]
                _exact_values.append(-total / (n + 1))
            logger.debug("Exact Bernoulli table extended to index %d", M)
    return BernoulliTable(tuple(_exact_values[:M + 1]))


def s_value(m: int, bern: BernoulliTable) -> Fraction:
    """
    S(m) = sum_{r=0}^{m} C(m+1, r) B_r B_{m-r}.

    Args:
        m: Non-negative index
        bern: Table covering 0..m

    Returns:
        Fraction: S(m)
    """
    bern.require(m)
    return sum((binomial(m + 1, r) * bern[r] * bern[m - r] for r in range(m + 1)), Fraction(0))


def conv_sum(m: int, bern: BernoulliTable) -> Fraction:
    """Unweighted convolution sum_{r=0}^{m-1} B_r B_{m-1-r}."""
    if m < 1:
        raise DomainError(f"Convolution length must be positive, got {m}")
    bern.require(m - 1)
    return sum((bern[r] * bern[m - 1 - r] for r in range(m)), Fraction(0))


def weighted_conv(m: int, upper: int, bern: BernoulliTable) -> Fraction:
    """
    Binomially weighted convolution sum_{r=0}^{m-1} C(upper, r) B_r B_{m-1-r}.

    Args:
        m: Positive length
        upper: Binomial upper index, either m or m+1
        bern: Table covering 0..m-1

    Returns:
        Fraction: The weighted sum

    Raises:
        DomainError: If upper is neither m nor m+1, or the table is too short
    """
    if m < 1:
        raise DomainError(f"Convolution length must be positive, got {m}")
    if upper not in (m, m + 1):
        raise DomainError(f"Binomial upper index must be m or m+1, got {upper} for m={m}")
    bern.require(m - 1)
    return sum((binomial(upper, r) * bern[r] * bern[m - 1 - r] for r in range(m)), Fraction(0))


def lemma2_sigma(m: int, bern: BernoulliTable) -> Fraction:
    """
    Triple-product double sum of the odd-m convolution identity.

    sum_{r=0}^{m} sum_{l=0}^{m-r} [C(m+1,r) C(m+1-r,l) / (m+1-r)] B_r B_l B_{m-r-l}

    Args:
        m: Odd positive integer
        bern: Table covering 0..m

    Returns:
        Fraction: The double sum
    """
    if m < 1 or m % 2 == 0:
        raise DomainError(f"The triple-product sum is defined here for odd positive m, got {m}")
    bern.require(m)
    total = Fraction(0)
    for r in range(m + 1):
        if bern[r] == 0:
            continue
        outer = binomial(m + 1, r)
        for lam in range(m - r + 1):
            term = bern[lam] * bern[m - r - lam]
            if term:
                total += Fraction(outer * binomial(m + 1 - r, lam), m + 1 - r) * bern[r] * term
    return total


def bernoulli_mod_table(ring: PrimePowerRing, N: int) -> ModularBernoulliTable:
    """
    B_0..B_N computed inside the ring by the defining recurrence.

    Every inverse of n+1 exists because n+1 <= p-1.

    Args:
        ring: Target ring
        N: Largest index, at most p-2

    Returns:
        ModularBernoulliTable: The reduced values

    Raises:
        DomainError: If N > p-2
    """
    if N < 0:
        raise DomainError(f"Bernoulli index must be non-negative, got {N}")
    if N > ring.p - 2:
        raise DomainError(f"B_{ring.p - 1} is not {ring.p}-integral; the modular table stops at {ring.p - 2}")

    modulus = ring.modulus
    values = [1]
    for n in range(1, N + 1):
        row = binomial_row(n + 1)
        total = 0
        for k in range(n):
            total += row[k] * values[k]
        values.append(-total * ring.inv_int(n + 1) % modulus)
    return ModularBernoulliTable(ring, tuple(values))


def reduce_exact_table(bern: BernoulliTable, ring: PrimePowerRing) -> ModularBernoulliTable:
    """
    Embed the exact table into the ring, up to index min(M, p-2).

    Args:
        bern: Exact table
        ring: Target ring

    Returns:
        ModularBernoulliTable: The embedded values
    """
    top = min(bern.max_index, ring.p - 2)
    return ModularBernoulliTable(ring, tuple(embed(bern[n], ring).value for n in range(top + 1)))


def bp3_mod_p2(p: int) -> Residue:
    """
    B_{p-3} modulo p^2 extracted from a power sum.

    Faulhaber gives sum_{k<p} k^(p-3) = p B_{p-3} + O(p^3) once B_{p-4} = 0,
    which needs p > 5.

    Args:
        p: Prime, at least 7

    Returns:
        Residue: B_{p-3} in the mod-p^2 ring

    Raises:
        DomainError: If p < 7
        ConsistencyError: If the power sum is not divisible by p
    """
    if p < 7:
        raise DomainError(f"Power-sum extraction of B_(p-3) needs p >= 7, got {p}")
    cube = make_ring(p, 3)
    total = power_sum(p - 3, cube).value
    if total % p:
        raise ConsistencyError(f"Power sum of k^{p - 3} modulo {p}^3 is not divisible by {p}")
    return make_ring(p, 2).residue(total // p)


def von_staudt_clausen_denominator(n: int) -> int:
    """Product of the primes q with (q-1) dividing n, for even n >= 2."""
    if n < 2 or n % 2:
        raise DomainError(f"The denominator theorem applies to even n >= 2, got {n}")
    return prod(d + 1 for d in divisors(n) if isprime(d + 1))


def expected_sign(n: int) -> int:
    """Sign of B_n for even n >= 2: (-1)^(n/2 + 1)."""
    return 1 if (n // 2) % 2 else -1
