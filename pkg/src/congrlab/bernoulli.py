"""Exact Bernoulli numbers and their reductions modulo prime powers.

The numbers are generated by z/(e^z - 1) = sum B_n z^n / n!.  They are
computed exactly with the classical recurrence

    sum_{k=0}^{n} C(n+1, k) B_k = 0,  B_0 = 1,

and only reduced modulo p^j afterwards.  At the scale this package scans
(p <= 10^4 only ever needs B_{p-3} for p <= 499, i.e. n <= 496) the exact
route is fast and leaves nothing to get subtly wrong.

The cache grows monotonically and is meant to be warmed once per process
before any parallel work starts; afterwards it is only read.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .residues import (
    CongrlabError,
    PrimePowerModulus,
    Residue,
    residue_of_rational,
)
from .verdicts import judge, skip

__all__ = [
    "BernoulliCache",
    "NonPIntegerBernoulli",
    "bernoulli_exact",
    "bernoulli_mod",
    "check_bernoulli_power_sums",
    "von_staudt_clausen_defect",
    "warm_bernoulli_cache",
]


class NonPIntegerBernoulli(CongrlabError):
    """Raised when p divides the denominator of the requested B_n."""


class BernoulliCache:
    """Monotonically growing cache of exact Bernoulli numbers."""

    def __init__(self):
        self._values = [Fraction(1), Fraction(-1, 2)]

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        self.extend_to(n)
        return self._values[n]

    def extend_to(self, n: int) -> None:
        values = self._values
        while len(values) <= n:
            r = len(values)
            acc = Fraction(0)
            for k, bk in enumerate(values):
                if bk:
                    acc += math.comb(r + 1, k) * bk
            b = -acc / (r + 1)
            if r % 2 == 1 and b != 0:
                raise AssertionError(f"B_{r} should vanish, recurrence gave {b}")
            values.append(b)


_CACHE = BernoulliCache()


def bernoulli_exact(n: int) -> Fraction:
    """Exact B_n (B_1 = -1/2)."""
    return _CACHE.get(n)


def warm_bernoulli_cache(n: int) -> None:
    """Precompute B_0 .. B_n; call before fanning out parallel workers."""
    _CACHE.extend_to(n)


def bernoulli_mod(p: int, n: int, j: int) -> Residue:
    """Residue of B_n in Z/p^j; B_{p-3} is always reducible for p >= 5."""
    b = bernoulli_exact(n)
    if b.denominator % p == 0:
        raise NonPIntegerBernoulli(f"p={p} divides the denominator of B_{n}")
    return residue_of_rational(b, PrimePowerModulus(p, j))


def von_staudt_clausen_defect(n: int) -> Fraction:
    """B_n + sum of 1/q over primes q with (q-1) | n.

    For even n this must be an integer; it is an independent structural check
    on the recurrence, since the set of primes involved is derived from
    divisibility alone.
    """
    from .residues import is_prime

    total = bernoulli_exact(n)
    for d in range(1, n + 1):
        if n % d == 0 and is_prime(d + 1):
            total += Fraction(1, d + 1)
    return total


def check_bernoulli_power_sums(p: int) -> list:
    """Links between B_{p-3} and the first two inverse power sums (p >= 5):

        S_1 == -(1/3) p^2 B_{p-3}  (mod p^3)
        S_2 ==  (2/3) p   B_{p-3}  (mod p^2)
    """
    if p < 5:
        return [
            skip("bernoulli.s1_link", p, None, "needs p >= 5"),
            skip("bernoulli.s2_link", p, None, "needs p >= 5"),
        ]
    from .harmonic import power_sum_table

    modulus = PrimePowerModulus(p, 3)
    sums = power_sum_table(modulus, 2)
    b = bernoulli_mod(p, p - 3, 3).value
    rhs1 = residue_of_rational(-Fraction(p * p, 3), modulus).value * b % modulus.pm
    rhs2 = residue_of_rational(Fraction(2 * p, 3), modulus).value * b % modulus.pm
    return [
        judge("bernoulli.s1_link", p, None, 3, sums.value(1), rhs1, modulus),
        judge("bernoulli.s2_link", p, None, 2, sums.value(2), rhs2, modulus),
    ]
