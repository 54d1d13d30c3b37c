"""
Prime-Power Ring Module

Residue arithmetic modulo p^e for a prime p > 3 and e in {1, 2, 3}.
Residues are canonical representatives in [0, p^e); combining residues of
different rings is an error rather than a coercion.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import wraps
from typing import Tuple

from sympy import isprime

from .conf import get_setting
from .exceptions import DomainError, NotInvertible, PDividesDenominator, RingMismatch


def extgcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid: return (x, y, d) with a*x + b*y = d = gcd(a, b).

    Args:
        a: First integer
        b: Second integer

    Returns:
        Tuple of the Bezout coefficients and the gcd
    """
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0, a


@dataclass(frozen=True)
class PrimePowerRing:
    """The ring Z/p^eZ that every residue of a congruence lives in."""

    p: int
    e: int
    modulus: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'modulus', self.p ** self.e)

    def __str__(self):
        return f"Z/{self.p}^{self.e}"

    def residue(self, value: int) -> 'Residue':
        """Wrap an integer as a canonical residue of this ring."""
        return Residue(value % self.modulus, self)

    @property
    def zero(self) -> 'Residue':
        return Residue(0, self)

    @property
    def one(self) -> 'Residue':
        return Residue(1, self)

    def embed(self, q: Fraction) -> 'Residue':
        return embed(q, self)

    def inv_int(self, value: int) -> int:
        """
        Invert an integer modulo p^e via extended Euclid.

        Raises:
            NotInvertible: If p divides the value
        """
        value %= self.modulus
        x, _, d = extgcd(value, self.modulus)
        if d != 1:
            raise NotInvertible(value, self.modulus)
        return x % self.modulus

    def with_exponent(self, e: int) -> 'PrimePowerRing':
        """The ring for the same prime with a different exponent."""
        return make_ring(self.p, e)


def _same_ring(func):
    @wraps(func)
    def method(self, other):
        if isinstance(other, int):
            other = self.ring.residue(other)
        elif not isinstance(other, Residue):
            return NotImplemented
        elif other.ring != self.ring:
            raise RingMismatch(f"Cannot combine residues of {self.ring} and {other.ring}")
        return func(self, other)

    return method


@dataclass(frozen=True)
class Residue:
    """A canonical element of a PrimePowerRing."""

    value: int
    ring: PrimePowerRing

    @_same_ring
    def __add__(self, other):
        return Residue((self.value + other.value) % self.ring.modulus, self.ring)

    @_same_ring
    def __radd__(self, other):
        return self + other

    @_same_ring
    def __sub__(self, other):
        return Residue((self.value - other.value) % self.ring.modulus, self.ring)

    @_same_ring
    def __rsub__(self, other):
        return other - self

    @_same_ring
    def __mul__(self, other):
        return Residue(self.value * other.value % self.ring.modulus, self.ring)

    @_same_ring
    def __rmul__(self, other):
        return self * other

    def __neg__(self):
        return Residue(-self.value % self.ring.modulus, self.ring)

    def __pow__(self, t: int):
        if t < 0:
            return Residue(pow(inv(self).value, -t, self.ring.modulus), self.ring)
        return Residue(pow(self.value, t, self.ring.modulus), self.ring)

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value} mod {self.ring.modulus}"

    def reduce(self, target: PrimePowerRing) -> 'Residue':
        """
        Reduce into a ring of the same prime with a smaller exponent.

        Raises:
            RingMismatch: If the primes differ or the target exponent is larger
        """
        if target.p != self.ring.p or target.e > self.ring.e:
            raise RingMismatch(f"Cannot reduce {self.ring} residue into {target}")
        return Residue(self.value % target.modulus, target)


def make_ring(p: int, e: int) -> PrimePowerRing:
    """
    Build a validated ring context Z/p^eZ.

    Args:
        p: A prime greater than 3, at most RING_PRIME_CAP
        e: Exponent in {1, 2, 3}

    Returns:
        PrimePowerRing: The ring with modulus p^e

    Raises:
        DomainError: If p is composite, p <= 3, p exceeds the cap, or e is out of range
    """
    if e not in (1, 2, 3):
        raise DomainError(f"Ring exponent must be 1, 2 or 3, got {e}")
    if p <= 3:
        raise DomainError(f"Prime must exceed 3, got {p}")
    if not isprime(p):
        raise DomainError(f"{p} is composite")
    cap = get_setting('RING_PRIME_CAP')
    if p > cap:
        raise DomainError(f"Prime {p} exceeds the ring cap of {cap}")
    return PrimePowerRing(p, e)


def inv(a: Residue) -> Residue:
    """
    Multiplicative inverse of a residue.

    Args:
        a: Residue coprime to the modulus

    Returns:
        Residue: b with a*b = 1

    Raises:
        NotInvertible: If p divides a.value
    """
    return Residue(a.ring.inv_int(a.value), a.ring)


def embed(q: Fraction, ring: PrimePowerRing) -> Residue:
    """
    Image of a p-integral rational in the ring.

    Args:
        q: Rational whose reduced denominator is coprime to p
        ring: Target ring

    Returns:
        Residue: numerator * inverse(denominator)

    Raises:
        PDividesDenominator: If p divides the denominator
    """
    q = Fraction(q)
    if q.denominator % ring.p == 0:
        raise PDividesDenominator(q, ring.modulus)
    return Residue(q.numerator * ring.inv_int(q.denominator) % ring.modulus, ring)


def pow_signed(k: int, t: int, ring: PrimePowerRing) -> Residue:
    """
    k^t in the ring, where a negative t means a power of the inverse of k.

    Args:
        k: Base integer
        t: Signed exponent
        ring: Target ring

    Returns:
        Residue: k^t

    Raises:
        NotInvertible: If t < 0 and p divides k
    """
    if t < 0:
        return Residue(pow(ring.inv_int(k), -t, ring.modulus), ring)
    return Residue(pow(k, t, ring.modulus), ring)


def power_sum(t: int, ring: PrimePowerRing) -> Residue:
    """
    Sum of k^t over k = 1..p-1 in the ring, for any signed t.

    Args:
        t: Signed exponent
        ring: Target ring

    Returns:
        Residue: The power sum
    """
    modulus = ring.modulus
    if t < 0:
        total = sum(pow(ring.inv_int(k), -t, modulus) for k in range(1, ring.p))
    else:
        total = sum(pow(k, t, modulus) for k in range(1, ring.p))
    return Residue(total % modulus, ring)
