"""
Harmonic Tables Module

Residues of H_k and H_k^(2) for k = 0..p-1 in a prime-power ring, and the
brute-force oracles for every left-hand side the closed forms are checked
against. Oracles only ever sum table entries; they never use Bernoulli
numbers.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .exactmath import binomial
from .exceptions import DomainError
from .modring import PrimePowerRing, Residue


@dataclass(frozen=True)
class HarmonicTable:
    """
    H_0..H_{p-1} and H^(2)_0..H^(2)_{p-1} as residues of one ring.

    inverses[k] holds the inverse of k (inverses[0] is unused), so negative
    powers of k cost no further inversions.
    """

    ring: PrimePowerRing
    h1: Tuple[int, ...]
    h2: Tuple[int, ...]
    inverses: Tuple[int, ...]

    def harmonic(self, k: int, order: int = 1) -> Residue:
        """H_k (order 1) or H_k^(2) (order 2) as a residue."""
        if order not in (1, 2):
            raise DomainError(f"Harmonic tables hold orders 1 and 2, got {order}")
        values = self.h1 if order == 1 else self.h2
        return Residue(values[k], self.ring)

    def k_power(self, k: int, t: int) -> int:
        """k^t modulo p^e for a signed exponent, using the stored inverses."""
        if t < 0:
            return pow(self.inverses[k], -t, self.ring.modulus)
        return pow(k, t, self.ring.modulus)


def _batch_inverses(p: int, ring: PrimePowerRing) -> Tuple[int, ...]:
    # prefix products, one inversion, then unwind
    modulus = ring.modulus
    prefix = [1] * p
    for k in range(1, p):
        prefix[k] = prefix[k - 1] * k % modulus
    inverses = [0] * p
    running = ring.inv_int(prefix[p - 1])
    for k in range(p - 1, 0, -1):
        inverses[k] = running * prefix[k - 1] % modulus
        running = running * k % modulus
    return tuple(inverses)


def harmonic_table(ring: PrimePowerRing) -> HarmonicTable:
    """
    Fill the H_k and H_k^(2) tables for k = 0..p-1.

    Args:
        ring: The ring the residues live in

    Returns:
        HarmonicTable: Both tables plus the inverses of 1..p-1
    """
    p, modulus = ring.p, ring.modulus
    inverses = _batch_inverses(p, ring)
    h1 = [0] * p
    h2 = [0] * p
    for k in range(1, p):
        inverse = inverses[k]
        h1[k] = (h1[k - 1] + inverse) % modulus
        h2[k] = (h2[k - 1] + inverse * inverse) % modulus
    return HarmonicTable(ring, tuple(h1), tuple(h2), inverses)


def sum_pow_harmonic(m: int, n: int, ring: PrimePowerRing,
                     table: Optional[HarmonicTable] = None) -> Residue:
    """
    Oracle for the sum of k^m * H_k^n over k = 1..p-1.

    Args:
        m: Signed power of k; negative values use inverse powers
        n: Power of H_k, 0..3
        ring: The ring to sum in
        table: Prebuilt harmonic table for the ring, built on demand if omitted

    Returns:
        Residue: The sum
    """
    if not 0 <= n <= 3:
        raise DomainError(f"Harmonic power n must be in 0..3, got {n}")
    if table is None:
        table = harmonic_table(ring)
    elif table.ring != ring:
        raise DomainError(f"Harmonic table over {table.ring} used for {ring}")

    modulus = ring.modulus
    h1 = table.h1
    total = 0
    for k in range(1, ring.p):
        total += table.k_power(k, m) * pow(h1[k], n, modulus)
    return Residue(total % modulus, ring)


def reflection_sides(k: int, n: int, table: HarmonicTable) -> Tuple[Residue, Residue]:
    """
    Both sides of H_{p-k}^(n) = (-1)^(n+1) H_{k-1}^(n) modulo p.

    Args:
        k: Index in 1..p-1
        n: Order 1 or 2
        table: Harmonic table over the mod-p ring

    Returns:
        Tuple of (H_{p-k}^(n), (-1)^(n+1) H_{k-1}^(n))
    """
    ring = table.ring
    if ring.e != 1:
        raise DomainError(f"The reflection congruence is stated modulo p, not over {ring}")
    if n not in (1, 2):
        raise DomainError(f"Reflection order must be 1 or 2, got {n}")
    if not 1 <= k <= ring.p - 1:
        raise DomainError(f"Reflection index must be in 1..{ring.p - 1}, got {k}")
    left = table.harmonic(ring.p - k, n)
    right = table.harmonic(k - 1, n)
    return left, (right if n % 2 else -right)


def reflection_check(k: int, n: int, ring: PrimePowerRing,
                     table: Optional[HarmonicTable] = None) -> bool:
    """True iff H_{p-k}^(n) = (-1)^(n+1) H_{k-1}^(n) modulo p."""
    left, right = reflection_sides(k, n, table if table is not None else harmonic_table(ring))
    return left == right


def triple_sum_ij4k(ring: PrimePowerRing, table: Optional[HarmonicTable] = None) -> Residue:
    """
    Sum of 1/(i j^4 k) over 1 <= i <= j <= k <= p-1, modulo p, in O(p).

    Uses sum_j H_j (H_{p-1} - H_{j-1}) / j^4.

    Args:
        ring: The mod-p ring
        table: Prebuilt harmonic table for the ring

    Returns:
        Residue: The nested sum
    """
    if ring.e != 1:
        raise DomainError(f"The triple sum is evaluated modulo p, not over {ring}")
    if table is None:
        table = harmonic_table(ring)
    modulus = ring.modulus
    h1 = table.h1
    top = h1[ring.p - 1]
    total = 0
    for j in range(1, ring.p):
        total += h1[j] * (top - h1[j - 1]) * pow(table.inverses[j], 4, modulus)
    return Residue(total % modulus, ring)


def triple_sum_ij4k_literal(ring: PrimePowerRing) -> Residue:
    """The same nested sum by the literal O(p^3) loop."""
    if ring.e != 1:
        raise DomainError(f"The triple sum is evaluated modulo p, not over {ring}")
    total = 0
    for i in range(1, ring.p):
        for j in range(i, ring.p):
            for k in range(j, ring.p):
                total += ring.inv_int(i * j ** 4 * k)
    return Residue(total % ring.modulus, ring)


def sun_binomial_sides(k: int, table: HarmonicTable) -> Tuple[Residue, Residue]:
    """
    Both sides of (-1)^k C(p-1, k) = 1 - p H_k + (p^2/2)(H_k^2 - H_k^(2)) modulo p^3.

    Args:
        k: Index in 1..p-1
        table: Harmonic table over the mod-p^3 ring

    Returns:
        Tuple of (left side, right side)
    """
    ring = table.ring
    if ring.e != 3:
        raise DomainError(f"The binomial congruence is stated modulo p^3, not over {ring}")
    if not 1 <= k <= ring.p - 1:
        raise DomainError(f"Binomial index must be in 1..{ring.p - 1}, got {k}")
    p = ring.p
    left = ring.residue((-1) ** k * binomial(p - 1, k))
    h = table.harmonic(k)
    h_sq = table.harmonic(k, 2)
    half = ring.residue(ring.inv_int(2))
    right = 1 - p * h + p * p * half * (h * h - h_sq)
    return left, right


def sun_binomial_check(k: int, ring: PrimePowerRing,
                       table: Optional[HarmonicTable] = None) -> bool:
    """True iff the binomial congruence holds modulo p^3 at index k."""
    left, right = sun_binomial_sides(k, table if table is not None else harmonic_table(ring))
    return left == right
