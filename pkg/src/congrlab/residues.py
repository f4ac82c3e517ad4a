"""Exact arithmetic in the residue rings Z/p^m and exact rational helpers.

Everything here is arbitrary precision: p^m routinely exceeds 64 bits
(499^7 is close to 2^63.5) and the verification work upstream depends on
the arithmetic being exact, so there is no floating point and no
fixed-width fast path anywhere in this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "CongrlabError",
    "ModulusMismatch",
    "NonUnit",
    "NotPInteger",
    "PrimePowerModulus",
    "Residue",
    "Valuation",
    "inverse_mod",
    "is_prime",
    "parse_rational",
    "q_add",
    "q_div",
    "q_mul",
    "q_neg",
    "residue_of_rational",
    "valuation_of_difference",
]


class CongrlabError(Exception):
    """Base class for all errors raised by this package."""


class ModulusMismatch(CongrlabError):
    """Raised when combining residues that live in different rings."""


class NonUnit(CongrlabError):
    """Raised when inverting an element divisible by p."""


class NotPInteger(CongrlabError):
    """Raised when a rational with p in its denominator is reduced mod p^m."""


# ---------------------------------------------------------------------------
# primality
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)

# Bases (2, 3, 5, 7) are a deterministic Miller-Rabin witness set below this
# bound, which comfortably covers the range the toolkit is meant to scan.
_DETERMINISTIC_LIMIT = 3_215_031_751


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: deterministic below ~3.2e9, strong-probabilistic above.

    Above the deterministic range the witness set is the first twelve primes
    plus eight pseudo-random bases seeded by n, so repeated calls agree.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < _DETERMINISTIC_LIMIT:
        return _miller_rabin(n, (2, 3, 5, 7))
    rng = random.Random(n)
    bases = list(_SMALL_PRIMES[:12]) + [rng.randrange(2, n - 1) for _ in range(8)]
    return _miller_rabin(n, bases)


# ---------------------------------------------------------------------------
# the ring Z/p^m
# ---------------------------------------------------------------------------


def inverse_mod(x: int, modulus: int) -> int:
    """Inverse of x modulo `modulus`, raising NonUnit when gcd(x, modulus) > 1."""
    try:
        return pow(x, -1, modulus)
    except ValueError:
        raise NonUnit(f"{x} is not invertible modulo {modulus}") from None


@dataclass(frozen=True)
class PrimePowerModulus:
    """The ring Z/p^m for an odd prime p and exponent m >= 1.

    p^m is computed once at construction and cached; instances are immutable
    and safe to share across worker processes.
    """

    p: int
    m: int
    pm: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"exponent must be >= 1, got {self.m}")
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"modulus base must be an odd prime, got {self.p}")
        object.__setattr__(self, "pm", self.p**self.m)

    def residue(self, value: int) -> "Residue":
        return Residue(value, self)

    def from_rational(self, q) -> "Residue":
        return residue_of_rational(q, self)

    def at_exponent(self, m: int) -> "PrimePowerModulus":
        return PrimePowerModulus(self.p, m)

    def __str__(self) -> str:
        return f"Z/{self.p}^{self.m}"


@dataclass(frozen=True)
class Residue:
    """An element of Z/p^m, kept in canonical form 0 <= value < p^m."""

    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.pm)

    def _coerce(self, other) -> "Residue":
        if isinstance(other, int):
            return Residue(other, self.modulus)
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"cannot combine {self.modulus} with {other.modulus}"
                )
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Residue(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def inv(self) -> "Residue":
        if self.value % self.modulus.p == 0:
            raise NonUnit(f"{self.value} is divisible by {self.modulus.p}")
        return Residue(pow(self.value, -1, self.modulus.pm), self.modulus)

    def __pow__(self, exponent: int) -> "Residue":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0 and self.value % self.modulus.p == 0:
            raise NonUnit(f"{self.value} is divisible by {self.modulus.p}")
        return Residue(pow(self.value, exponent, self.modulus.pm), self.modulus)

    def at_exponent(self, m: int) -> "Residue":
        """Reduce to the smaller ring Z/p^m (m <= current exponent)."""
        if m > self.modulus.m:
            raise ValueError(
                f"cannot lift a residue from exponent {self.modulus.m} to {m}"
            )
        return Residue(self.value, self.modulus.at_exponent(m))

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus.p}^{self.modulus.m})"


class Valuation(NamedTuple):
    """A p-adic valuation, possibly only known as a lower bound.

    `is_floor` is True when the measured difference vanished in the working
    ring, so the true valuation is >= `value`.
    """

    value: int
    is_floor: bool

    def __str__(self) -> str:
        return f">={self.value}" if self.is_floor else str(self.value)

    @classmethod
    def parse(cls, text: str) -> "Valuation":
        if text.startswith(">="):
            return cls(int(text[2:]), True)
        return cls(int(text), False)


def valuation_of_difference(a: Residue, b: Residue) -> Valuation:
    """Largest j <= m with p^j | (a - b); reported as a floor when a == b."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"cannot compare {a.modulus} with {b.modulus}")
    p, m = a.modulus.p, a.modulus.m
    d = (a.value - b.value) % a.modulus.pm
    if d == 0:
        return Valuation(m, True)
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return Valuation(v, False)


def residue_of_rational(q, modulus: PrimePowerModulus) -> Residue:
    """Reduce a rational with denominator coprime to p into Z/p^m."""
    q = Fraction(q)
    if q.denominator % modulus.p == 0:
        raise NotPInteger(
            f"{q} is not a {modulus.p}-integer (denominator divisible by p)"
        )
    value = q.numerator * pow(q.denominator, -1, modulus.pm) % modulus.pm
    return Residue(value, modulus)


# ---------------------------------------------------------------------------
# exact rational arithmetic (the oracle side)
# ---------------------------------------------------------------------------
#
# Exact rationals are fractions.Fraction throughout the package: it already
# guarantees the normal form (reduced, positive denominator) these helpers
# would otherwise have to maintain.


def q_add(a, b) -> Fraction:
    return Fraction(a) + Fraction(b)


def q_mul(a, b) -> Fraction:
    return Fraction(a) * Fraction(b)


def q_div(a, b) -> Fraction:
    return Fraction(a) / Fraction(b)


def q_neg(a) -> Fraction:
    return -Fraction(a)


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" into a reduced Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def rational_valuation(q, p: int):
    """p-adic valuation of a rational; None for 0 (valuation +infinity)."""
    q = Fraction(q)
    if q == 0:
        return None
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v
