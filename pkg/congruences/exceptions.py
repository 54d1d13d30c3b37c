"""
Exception hierarchy for the congruence library.

Every error raised on purpose by the library derives from CongruenceError,
so the verifier can turn any of them into a failed record.
"""


class CongruenceError(Exception):
    """Base class for library errors."""


class DomainError(CongruenceError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class NotInvertible(CongruenceError, ArithmeticError):
    """A residue shares a factor with the modulus."""

    def __init__(self, value, modulus, message=None):
        self.value = value
        self.modulus = modulus
        super().__init__(message or f"{value} is not invertible modulo {modulus}")


class PDividesDenominator(NotInvertible):
    """A rational is not p-integral, so it has no image in Z/p^eZ."""

    def __init__(self, fraction, modulus):
        self.fraction = fraction
        super().__init__(
            fraction.denominator,
            modulus,
            f"denominator of {fraction} is not invertible modulo {modulus}",
        )


class RingMismatch(CongruenceError, ValueError):
    """Two residues from different rings were combined."""


class ConsistencyError(CongruenceError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
