"""
Exact Arithmetic Module

This module provides the arbitrary-precision layer of the library: reduced
rationals, memoized binomial coefficients, exact harmonic and power sums,
and the exact (non-modular) identities relating them to Bernoulli numbers.
Nothing here approximates; every equality test compares reduced fractions.
"""

import math
import threading
from fractions import Fraction
from typing import List, Tuple

from .conf import get_setting
from .exceptions import DomainError

# Fraction keeps numerator/denominator coprime with a positive denominator
# and normalizes zero to 0/1 after every operation.
ExactRational = Fraction


class BinomialCache:
    """
    Pascal's triangle memoized up to a fixed number of rows.

    Rows are appended under a lock the first time they are requested and
    are never modified afterwards, so concurrent readers need no locking.
    Coefficients from rows beyond the cap come from math.comb.
    """

    def __init__(self, max_rows: int = None):
        self.max_rows = max_rows if max_rows is not None else get_setting('BINOMIAL_CACHE_ROWS')
        self._rows: List[Tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> Tuple[int, ...]:
        """
        Return row n of Pascal's triangle, C(n, 0..n).

        Args:
            n: Row index, at most the configured cap

        Returns:
            Tuple of the n+1 coefficients

        Raises:
            DomainError: If n is negative or beyond the cache cap
        """
        if n < 0:
            raise DomainError(f"Row index must be non-negative, got {n}")
        if n > self.max_rows:
            raise DomainError(f"Row {n} exceeds the binomial cache cap of {self.max_rows}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    previous = self._rows[-1]
                    inner = tuple(previous[i - 1] + previous[i] for i in range(1, len(previous)))
                    self._rows.append((1,) + inner + (1,))
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise DomainError(f"Binomial arguments must be non-negative, got ({n}, {k})")
        if k > n:
            raise DomainError(f"Binomial C({n}, {k}) requires k <= n")
        if n > self.max_rows:
            return math.comb(n, k)
        return self.row(n)[k]


_binomials = BinomialCache()


def binomial(n: int, k: int) -> int:
    """
    Return the binomial coefficient C(n, k) exactly.

    Args:
        n: Non-negative upper index
        k: Non-negative lower index, at most n

    Returns:
        int: C(n, k)

    Raises:
        DomainError: If k > n or either argument is negative
    """
    return _binomials(n, k)


def binomial_row(n: int) -> Tuple[int, ...]:
    """Row n of Pascal's triangle; rows past the cache cap come from math.comb."""
    if 0 <= n <= _binomials.max_rows:
        return _binomials.row(n)
    if n < 0:
        raise DomainError(f"Row index must be non-negative, got {n}")
    return tuple(math.comb(n, k) for k in range(n + 1))


def harmonic_exact(n: int) -> Fraction:
    """
    Return the harmonic number H_n = 1 + 1/2 + ... + 1/n as a reduced fraction.

    Args:
        n: Non-negative index; H_0 = 0

    Returns:
        Fraction: H_n
    """
    if n < 0:
        raise DomainError(f"Harmonic index must be non-negative, got {n}")
    total = Fraction(0)
    for i in range(1, n + 1):
        total += Fraction(1, i)
    return total


def sum_pow_harmonic_exact(m: int, n: int, p: int) -> Fraction:
    """
    Brute-force oracle for the sum of k^m * H_k^n over k = 1..p-1.

    The harmonic number is rebuilt term by term for every k: this is the
    naive double loop every exact identity is compared against, and it
    deliberately shares no code with the closed forms under test.

    Args:
        m: Non-negative power of k
        n: Power of H_k, 0..3 (n=0 gives the plain power sum)
        p: Upper end of the range plus one, at least 2

    Returns:
        Fraction: The exact sum
    """
    if m < 0:
        raise DomainError(f"Exponent m must be non-negative, got {m}")
    if not 0 <= n <= 3:
        raise DomainError(f"Harmonic power n must be in 0..3, got {n}")
    if p < 2:
        raise DomainError(f"Range bound p must be at least 2, got {p}")

    total = Fraction(0)
    for k in range(1, p):
        h_k = Fraction(0)
        for j in range(1, k + 1):
            h_k += Fraction(1, j)
        total += k ** m * h_k ** n
    return total


def faulhaber_rhs_exact(m: int, p: int, bern) -> Fraction:
    """
    Faulhaber's closed form for 1^m + 2^m + ... + (p-1)^m.

    Args:
        m: Non-negative exponent
        p: Upper end of the range plus one
        bern: BernoulliTable covering indices 0..m

    Returns:
        Fraction: (1/(m+1)) * sum_r C(m+1, r) B_r p^(m+1-r)

    Raises:
        DomainError: If the table is too short
    """
    bern.require(m)
    total = Fraction(0)
    for r in range(m + 1):
        total += binomial(m + 1, r) * bern[r] * p ** (m + 1 - r)
    return total / (m + 1)


def lemma1_rhs_exact(m: int, p: int, bern) -> Fraction:
    """
    Exact right side of the closed form for sum_{k<p} k^m H_k.

    H_{p-1}/(m+1) * sum_r C(m+1,r) B_r p^(m+1-r) - (p-1) B_m
      - 1/(m+1) * sum_{r<m} sum_{l<=m-r} C(m+1,r) C(m+1-r,l)/(m+1-r) B_r B_l p^(m+1-r-l)

    Args:
        m: Positive exponent
        p: Positive integer range bound, at least 2
        bern: BernoulliTable covering indices 0..m

    Returns:
        Fraction: The right side, which equals sum_pow_harmonic_exact(m, 1, p)

    Raises:
        DomainError: If m < 1 or the table is too short
    """
    if m < 1:
        raise DomainError(f"Exponent m must be positive, got {m}")
    bern.require(m)

    leading = harmonic_exact(p - 1) * faulhaber_rhs_exact(m, p, bern)
    double_sum = Fraction(0)
    for r in range(m):
        outer = binomial(m + 1, r)
        for lam in range(m - r + 1):
            coefficient = Fraction(outer * binomial(m + 1 - r, lam), m + 1 - r)
            double_sum += coefficient * bern[r] * bern[lam] * p ** (m + 1 - r - lam)
    return leading - (p - 1) * bern[m] - double_sum / (m + 1)


def harmonic_square_identity_exact(p: int) -> bool:
    """
    Check H_{p-1}^2 = 2 * sum_{k<p} H_k/k - H_{p-1}^(2) exactly.

    Args:
        p: Range bound, at least 2

    Returns:
        bool: True if the identity holds
    """
    if p < 2:
        raise DomainError(f"Range bound p must be at least 2, got {p}")
    h = Fraction(0)
    h2 = Fraction(0)
    weighted = Fraction(0)
    for k in range(1, p):
        h += Fraction(1, k)
        h2 += Fraction(1, k * k)
        weighted += h / k
    return h * h == 2 * weighted - h2


def _require_odd(m: int, label: str) -> None:
    if m < 1 or m % 2 == 0:
        raise DomainError(f"{label} is stated for odd positive m, got {m}")


def lemma2_check(m: int, bern) -> bool:
    """
    Check the triple-product Bernoulli identity for odd m != 3.

    (2/(m+1)) Sigma + (1/(m+1)) sum_{r<m} C(m+1,r) B_r B_{m-1-r}
        = -((m+2)/(2m)) sum_{r<m} C(m,r) B_r B_{m-1-r} + (1/4) sum_{r<m} B_r B_{m-1-r}

    Args:
        m: Odd positive integer other than 3
        bern: BernoulliTable covering indices 0..m

    Returns:
        bool: True if both sides are equal

    Raises:
        DomainError: If m is even or equals 3
    """
    _require_odd(m, "The triple-product identity")
    if m == 3:
        raise DomainError("The triple-product identity excludes m = 3")
    left, right = lemma2_sides(m, bern)
    return left == right


def lemma2_sides(m: int, bern) -> Tuple[Fraction, Fraction]:
    """
    Evaluate both sides of the triple-product identity without checking m.

    Used directly by the exact suite to record the m = 3 outcome.

    Args:
        m: Odd positive integer
        bern: BernoulliTable covering indices 0..m

    Returns:
        Tuple of (left side, right side)
    """
    from .bernoulli import conv_sum, lemma2_sigma, weighted_conv

    _require_odd(m, "The triple-product identity")
    bern.require(m)
    left = (Fraction(2, m + 1) * lemma2_sigma(m, bern)
            + weighted_conv(m, m + 1, bern) / (m + 1))
    right = (-Fraction(m + 2, 2 * m) * weighted_conv(m, m, bern)
             + conv_sum(m, bern) / 4)
    return left, right


def l8_sides(m: int, bern) -> Tuple[Fraction, Fraction]:
    """
    Both sides of sum_{r<m} C(m+1,r) B_r B_{m-1-r} = ((m+1)/2) sum_{r<m} B_r B_{m-1-r}.

    Args:
        m: Odd positive integer
        bern: BernoulliTable covering indices 0..m

    Returns:
        Tuple of (left side, right side)
    """
    from .bernoulli import conv_sum, weighted_conv

    _require_odd(m, "The weighted convolution identity")
    bern.require(m)
    return weighted_conv(m, m + 1, bern), Fraction(m + 1, 2) * conv_sum(m, bern)


def l8_check(m: int, bern) -> bool:
    """
    Check the weighted Bernoulli convolution identity for odd m.

    The identity holds for m = 1 and every odd m >= 5; at m = 3 it is false.

    Args:
        m: Odd positive integer
        bern: BernoulliTable covering indices 0..m

    Returns:
        bool: True if both sides are equal

    Raises:
        DomainError: If m is even
    """
    left, right = l8_sides(m, bern)
    return left == right


def dilcher_sides(n: int, bern) -> Tuple[Fraction, Fraction]:
    """
    Both sides of (n+2) sum B_k B_{n-k} = 2 sum C(n+2,k) B_k B_{n-k} + n(n+1) B_n, k = 2..n-2.

    Args:
        n: Even integer, at least 4
        bern: BernoulliTable covering indices 0..n

    Returns:
        Tuple of (left side, right side)

    Raises:
        DomainError: If n is odd or below 4, or the table is too short
    """
    if n < 4 or n % 2:
        raise DomainError(f"The convolution identity needs even n >= 4, got {n}")
    bern.require(n)
    plain = Fraction(0)
    weighted = Fraction(0)
    for k in range(2, n - 1):
        product = bern[k] * bern[n - k]
        plain += product
        weighted += binomial(n + 2, k) * product
    return (n + 2) * plain, 2 * weighted + n * (n + 1) * bern[n]


def dilcher_check(n: int, bern) -> bool:
    """
    Check the even-index Bernoulli convolution identity.

    Args:
        n: Even integer, at least 4
        bern: BernoulliTable covering indices 0..n

    Returns:
        bool: True if both sides are equal
    """
    left, right = dilcher_sides(n, bern)
    return left == right


def power_sum_exact(m: int, p: int) -> Fraction:
    """Direct summation of k^m for k = 1..p-1."""
    return Fraction(sum(k ** m for k in range(1, p)))


def as_fraction_string(value: Fraction) -> str:
    """Render a rational as numerator/denominator, always with both parts."""
    return f"{value.numerator}/{value.denominator}"

