"""Generalized harmonic numbers and inverse power sums modulo p^m.

H_k is the k-th elementary symmetric function of 1/1, 1/2, ..., 1/(p-1),
with H_0 = 1 and H_k = 0 for k >= p.  The table is built by the O(p^2)
coefficient recurrence for the product prod_{k<p} (1 - x/k): after step k
the array holds the coefficients of the partial product, so the final
coefficient of x^j is (-1)^j H_j.

Power sums S_m = sum_{k<p} 1/k^m are computed independently (directly from
inverse powers), which makes the Newton-identity cross-check between the
two meaningful: H_2 must equal (S_1^2 - S_2)/2.

The check_* functions verify families of congruences these quantities
satisfy and return one Verdict per instance, including explicit skip
verdicts for instances excluded by a stated side condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .residues import CongrlabError, PrimePowerModulus, residue_of_rational
from .verdicts import judge, skip

__all__ = [
    "DomainTooSmall",
    "HarmonicTable",
    "PowerSumTable",
    "check_harmonic_congruences",
    "check_power_sum_congruences",
    "check_reflection_identity",
    "harmonic_numbers_exact",
    "harmonic_table",
    "inverse_table",
    "power_sum",
    "power_sum_exact",
    "power_sum_table",
]


class DomainTooSmall(CongrlabError):
    """Raised when a harmonic number with index below 0 is requested."""


def inverse_table(p: int, modulus: int) -> list:
    """inv[k] for k = 1..p-1 modulo `modulus`, via one batched inversion.

    Entry 0 is a placeholder so the table can be indexed by k directly.
    """
    prefix = [1] * p
    for k in range(1, p):
        prefix[k] = prefix[k - 1] * k % modulus
    inv = [0] * p
    running = pow(prefix[p - 1], -1, modulus)
    for k in range(p - 1, 0, -1):
        inv[k] = running * prefix[k - 1] % modulus
        running = running * k % modulus
    return inv


@dataclass(frozen=True)
class HarmonicTable:
    """Residues of H_0 .. H_{p-1} in Z/p^m; queries past the end return 0."""

    modulus: PrimePowerModulus
    h: tuple

    def value(self, k: int) -> int:
        if k < 0:
            raise DomainTooSmall(f"harmonic index must be >= 0, got {k}")
        if k >= self.modulus.p:
            return 0
        return self.h[k]

    def residue(self, k: int):
        return self.modulus.residue(self.value(k))


def harmonic_table(modulus: PrimePowerModulus) -> HarmonicTable:
    p, pm = modulus.p, modulus.pm
    inv = inverse_table(p, pm)
    c = [0] * p
    c[0] = 1
    for k in range(1, p):
        ik = inv[k]
        # c <- c - (1/k) * shift(c), in place from the top down
        for j in range(k, 0, -1):
            c[j] = (c[j] - ik * c[j - 1]) % pm
    h = tuple(c[k] if k % 2 == 0 else -c[k] % pm for k in range(p))
    return HarmonicTable(modulus, h)


@dataclass(frozen=True)
class PowerSumTable:
    """Residues of S_m = sum_{k=1}^{p-1} 1/k^m for 1 <= m <= max_exponent."""

    modulus: PrimePowerModulus
    sums: tuple

    @property
    def max_exponent(self) -> int:
        return len(self.sums)

    def value(self, exponent: int) -> int:
        if not 1 <= exponent <= len(self.sums):
            raise ValueError(f"exponent {exponent} outside table range")
        return self.sums[exponent - 1]

    def residue(self, exponent: int):
        return self.modulus.residue(self.value(exponent))


def power_sum_table(modulus: PrimePowerModulus, max_exponent: int) -> PowerSumTable:
    p, pm = modulus.p, modulus.pm
    inv = inverse_table(p, pm)
    acc = [0] * max_exponent
    for k in range(1, p):
        w = 1
        ik = inv[k]
        for e in range(max_exponent):
            w = w * ik % pm
            acc[e] += w
    return PowerSumTable(modulus, tuple(a % pm for a in acc))


def power_sum(modulus: PrimePowerModulus, exponent: int):
    """Residue of sum_{k=1}^{p-1} 1/k^exponent in Z/p^m."""
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    p, pm = modulus.p, modulus.pm
    inv = inverse_table(p, pm)
    total = 0
    for k in range(1, p):
        total += pow(inv[k], exponent, pm)
    return modulus.residue(total)


# ---------------------------------------------------------------------------
# exact-rational oracles
# ---------------------------------------------------------------------------


def harmonic_numbers_exact(p: int) -> tuple:
    """H_0 .. H_{p-1} as exact rationals (same recurrence, over Q)."""
    c = [Fraction(0)] * p
    c[0] = Fraction(1)
    for k in range(1, p):
        ik = Fraction(1, k)
        for j in range(k, 0, -1):
            c[j] = c[j] - ik * c[j - 1]
    return tuple(c[k] if k % 2 == 0 else -c[k] for k in range(p))


def power_sum_exact(p: int, exponent: int) -> Fraction:
    return sum(Fraction(1, k**exponent) for k in range(1, p))


# ---------------------------------------------------------------------------
# congruence suites
# ---------------------------------------------------------------------------


def check_reflection_identity(p: int, m_work: int = None) -> list:
    """Verify the reflection structure of the harmonic polynomial at high precision.

    The product P(x) = prod (1 - x/k) satisfies P(x) = P(p - x).  Two
    consequences are checked in Z/p^{m_work}:

    * the exact pair identity
      H_{2m-1} - m p H_{2m}
        = (p^2/2) * sum_{k=2m+1}^{p-1} (-1)^k C(k, 2m-1) p^{k-2m-1} H_k,
    * coefficient-by-coefficient agreement of P(x) and P(p - x),
      i.e. H_j = sum_{k>=j} (-1)^k C(k, j) p^{k-j} H_k for every j.

    Both sides are equal as rationals with p-free denominators, so they must
    agree at any working exponent; the default m_work = p + 2 is high enough
    that no summand is truncated away entirely.
    """
    if m_work is None:
        m_work = p + 2
    modulus = PrimePowerModulus(p, m_work)
    pm = modulus.pm
    table = harmonic_table(modulus)
    half_p2 = residue_of_rational(Fraction(p * p, 2), modulus).value
    ppow = [1] * p
    for i in range(1, p):
        ppow[i] = ppow[i - 1] * p % pm

    out = []
    for m in range(1, (p - 1) // 2 + 3):
        lhs = (table.value(2 * m - 1) - m * p * table.value(2 * m)) % pm
        total = 0
        for k in range(2 * m + 1, p):
            term = math.comb(k, 2 * m - 1) % pm * ppow[k - 2 * m - 1] % pm
            term = term * table.h[k] % pm
            total = total - term if k % 2 else total + term
        rhs = half_p2 * total % pm
        out.append(
            judge(f"reflection.pair[m={m}]", p, None, m_work, lhs, rhs, modulus)
        )

    for j in range(p):
        mirrored = 0
        for k in range(j, p):
            term = math.comb(k, j) % pm * ppow[k - j] % pm * table.h[k] % pm
            mirrored = mirrored - term if k % 2 else mirrored + term
        out.append(
            judge(
                f"reflection.mirror[j={j}]",
                p,
                None,
                m_work,
                table.h[j],
                mirrored % pm,
                modulus,
            )
        )
    return out


def check_harmonic_congruences(p: int) -> list:
    """Congruences satisfied by individual harmonic numbers.

    (a) H_m == 0 (mod p) for 1 <= m <= p-2
    (b) H_m == 0 (mod p^2) for odd m != p-2
    (c) H_{2m-1} - m p H_{2m} == 0 (mod p^4) when 2m+1 != p-2
    (d) H_{p-4} - ((p-3)/2) p H_{p-3} == -p^3/4 (mod p^4), needs p >= 5
    (e) H_{p-2} == p/2 (mod p^2)
    (f) H_{p-1} == -1 (mod p)
    """
    modulus = PrimePowerModulus(p, 4)
    pm = modulus.pm
    table = harmonic_table(modulus)
    out = []

    for m in range(1, p - 1):
        out.append(
            judge(f"harmonic.h_mod_p[m={m}]", p, None, 1, table.h[m], 0, modulus)
        )

    for m in range(1, p, 2):
        if m == p - 2:
            continue
        out.append(
            judge(f"harmonic.h_mod_p2[m={m}]", p, None, 2, table.h[m], 0, modulus)
        )

    for m in range(1, (p + 1) // 2 + 2):
        if 2 * m + 1 == p - 2:
            # boundary pair handled by the -p^3/4 case below
            continue
        lhs = (table.value(2 * m - 1) - m * p * table.value(2 * m)) % pm
        out.append(
            judge(f"harmonic.pair_mod_p4[m={m}]", p, None, 4, lhs, 0, modulus)
        )

    if p >= 5:
        lhs = (table.value(p - 4) - (p - 3) // 2 * p * table.value(p - 3)) % pm
        rhs = residue_of_rational(-Fraction(p**3, 4), modulus).value
        out.append(judge("harmonic.pair_boundary", p, None, 4, lhs, rhs, modulus))
    else:
        out.append(skip("harmonic.pair_boundary", p, None, "needs index p-4 >= 1"))

    rhs = residue_of_rational(Fraction(p, 2), modulus).value
    out.append(judge("harmonic.h_p_minus_2", p, None, 2, table.h[p - 2], rhs, modulus))
    out.append(judge("harmonic.h_p_minus_1", p, None, 1, table.h[p - 1], -1, modulus))
    return out


def check_power_sum_congruences(p: int) -> list:
    """Congruences satisfied by the inverse power sums S_m.

    Swept over 1 <= m <= 2(p-1) + 1 so both branches of every divisibility
    condition occur:

    (1) S_m == 0 (mod p) unless (p-1) | m, in which case S_m == -1 (mod p)
    (2) for odd m, S_m == 0 (mod p^2) unless (p-1) | m+1, then S_m == mp/2
    (3) for odd m, 2 S_m + m p S_{m+1} == 0 (mod p^3); modulo p^4 it is 0
        when (p-1) does not divide m+3 and -m(m+1)(m+2) p^3 / 12 when it does
    (4) for odd m with (p-1) not dividing m+5,
        S_m + (m/2) p S_{m+1} + (m(m+1)/12) p^2 S_{m+2} == 0 (mod p^6)
    """
    modulus = PrimePowerModulus(p, 6)
    pm = modulus.pm
    top = 2 * (p - 1) + 1
    sums = power_sum_table(modulus, top + 2)
    out = []

    def rat(q: Fraction) -> int:
        return residue_of_rational(q, modulus).value

    for m in range(1, top + 1):
        rhs = -1 % pm if m % (p - 1) == 0 else 0
        out.append(
            judge(f"power_sum.mod_p[m={m}]", p, None, 1, sums.value(m), rhs, modulus)
        )

        if m % 2 == 0:
            continue

        rhs = rat(Fraction(m * p, 2)) if (m + 1) % (p - 1) == 0 else 0
        out.append(
            judge(f"power_sum.mod_p2[m={m}]", p, None, 2, sums.value(m), rhs, modulus)
        )

        pair = (2 * sums.value(m) + m * p * sums.value(m + 1)) % pm
        out.append(judge(f"power_sum.pair_mod_p3[m={m}]", p, None, 3, pair, 0, modulus))
        if (m + 3) % (p - 1) == 0:
            rhs = rat(-Fraction(m * (m + 1) * (m + 2), 12) * p**3)
        else:
            rhs = 0
        out.append(
            judge(f"power_sum.pair_mod_p4[m={m}]", p, None, 4, pair, rhs, modulus)
        )

        name = f"power_sum.triple_mod_p6[m={m}]"
        if (m + 5) % (p - 1) == 0:
            out.append(skip(name, p, None, f"excluded: {p - 1} divides m+5"))
        else:
            triple = (
                sums.value(m)
                + rat(Fraction(m, 2)) * p * sums.value(m + 1)
                + rat(Fraction(m * (m + 1), 12)) * p * p * sums.value(m + 2)
            ) % pm
            out.append(judge(name, p, None, 6, triple, 0, modulus))

    return out


def run_lemma_suites(p: int) -> list:
    """All harmonic-side verdict suites for one prime, plus the Bernoulli link."""
    from .bernoulli import check_bernoulli_power_sums

    out = []
    out.extend(check_reflection_identity(p))
    out.extend(check_harmonic_congruences(p))
    out.extend(check_power_sum_congruences(p))
    out.extend(check_bernoulli_power_sums(p))
    return out
