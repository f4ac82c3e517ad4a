"""Harmonic tables, power sums and their congruence suites.

The exact-rational functions are the oracles here: every residue the ring
computations produce is compared against the same quantity computed over Q
and reduced afterwards.
"""

import math
from fractions import Fraction

import pytest

from congrlab import (
    DomainTooSmall,
    PrimePowerModulus,
    check_harmonic_congruences,
    check_power_sum_congruences,
    check_reflection_identity,
    harmonic_numbers_exact,
    harmonic_table,
    power_sum,
    power_sum_exact,
    power_sum_table,
    residue_of_rational,
)
from congrlab.scanner import odd_primes_between

SMALL_PRIMES = odd_primes_between(3, 31)


def assert_all_pass(verdicts):
    bad = [v for v in verdicts if v.failed]
    assert not bad, bad[:5]


class TestHarmonicTable:
    def test_p5_mod_p(self):
        table = harmonic_table(PrimePowerModulus(5, 1))
        assert table.h == (1, 0, 0, 0, 4)

    def test_p5_mod_p2_penultimate(self):
        # H_3 = 5/12, and 5 * inv(12) = 5 * 23 = 115 == 15 mod 25, i.e. p/2
        table = harmonic_table(PrimePowerModulus(5, 2))
        assert table.value(3) == 15
        assert table.value(3) == residue_of_rational(Fraction(5, 2), table.modulus).value

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_empty_product_convention(self, p):
        assert harmonic_table(PrimePowerModulus(p, 2)).value(0) == 1

    def test_queries_past_the_end_are_zero(self):
        table = harmonic_table(PrimePowerModulus(5, 2))
        assert table.value(5) == 0
        assert table.value(100) == 0
        assert table.residue(7).value == 0

    def test_negative_index(self):
        table = harmonic_table(PrimePowerModulus(5, 2))
        with pytest.raises(DomainTooSmall):
            table.value(-1)

    def test_exact_values_p5(self):
        assert harmonic_numbers_exact(5) == (
            Fraction(1),
            Fraction(25, 12),
            Fraction(35, 24),
            Fraction(5, 12),
            Fraction(1, 24),
        )

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    @pytest.mark.parametrize("m", [1, 3, 7])
    def test_table_matches_exact_oracle(self, p, m):
        modulus = PrimePowerModulus(p, m)
        table = harmonic_table(modulus)
        exact = harmonic_numbers_exact(p)
        for k in range(p):
            assert table.h[k] == residue_of_rational(exact[k], modulus).value, (p, m, k)

    def test_last_value_is_minus_one_mod_p(self):
        for p in SMALL_PRIMES:
            table = harmonic_table(PrimePowerModulus(p, 1))
            assert table.value(p - 1) == p - 1


class TestPowerSums:
    @pytest.mark.parametrize(
        "p,m,exp,expected",
        [
            (5, 2, 1, 0),  # 25/12 == 0 mod 25
            (5, 1, 4, 4),  # p-1 | 4, so the sum is -1 mod p
            (7, 1, 3, 0),  # 6 does not divide 3
        ],
    )
    def test_examples(self, p, m, exp, expected):
        assert power_sum(PrimePowerModulus(p, m), exp).value == expected

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            power_sum(PrimePowerModulus(5, 1), 0)

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    @pytest.mark.parametrize("m", [1, 3, 7])
    def test_table_matches_exact_oracle(self, p, m):
        modulus = PrimePowerModulus(p, m)
        table = power_sum_table(modulus, 6)
        for exp in range(1, 7):
            expected = residue_of_rational(power_sum_exact(p, exp), modulus).value
            assert table.value(exp) == expected
            assert power_sum(modulus, exp).value == expected

    def test_table_range(self):
        table = power_sum_table(PrimePowerModulus(5, 2), 3)
        with pytest.raises(ValueError):
            table.value(4)

    @pytest.mark.parametrize("p", odd_primes_between(3, 61))
    def test_newton_identity_links_table_and_sums(self, p):
        # H_2 from the coefficient recurrence equals (S_1^2 - S_2)/2, where
        # the power sums are computed by an unrelated route
        modulus = PrimePowerModulus(p, 7)
        table = harmonic_table(modulus)
        sums = power_sum_table(modulus, 2)
        half = residue_of_rational(Fraction(1, 2), modulus).value
        s1, s2 = sums.value(1), sums.value(2)
        assert table.value(2) == half * (s1 * s1 - s2) % modulus.pm


class TestReflectionIdentity:
    def test_exact_pair_identity_small_prime(self):
        # rational-arithmetic oracle for the m = 1 pair identity at p = 5:
        # H_1 - p H_2 = -125/24, and (p^2/2) * (-3 H_3 + 4 p H_4) = -125/24
        h = harmonic_numbers_exact(5)
        lhs = h[1] - 5 * h[2]
        rhs = Fraction(25, 2) * (-3 * h[3] + 4 * 5 * h[4])
        assert lhs == rhs == Fraction(-125, 24)

    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_exact_pair_identity_oracle(self, p):
        h = list(harmonic_numbers_exact(p)) + [Fraction(0)] * p
        for m in range(1, (p - 1) // 2 + 3):
            lhs = h[2 * m - 1] - m * p * h[2 * m]
            rhs = Fraction(p * p, 2) * sum(
                (-1) ** k * math.comb(k, 2 * m - 1) * p ** (k - 2 * m - 1) * h[k]
                for k in range(2 * m + 1, p)
            )
            assert lhs == rhs, (p, m)

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_suite_all_pass(self, p):
        verdicts = check_reflection_identity(p)
        assert_all_pass(verdicts)
        names = {v.case for v in verdicts}
        assert "reflection.pair[m=1]" in names
        assert "reflection.mirror[j=0]" in names

    def test_trivial_branch_past_the_table(self):
        # indices at or past p make both sides vanish
        verdicts = check_reflection_identity(5)
        boundary = [v for v in verdicts if v.case == "reflection.pair[m=4]"]
        assert boundary and boundary[0].passed
        assert boundary[0].lhs == 0 and boundary[0].rhs == 0

    def test_working_exponent_override(self):
        assert_all_pass(check_reflection_identity(5, m_work=12))


class TestHarmonicCongruences:
    def test_p11_h3_vanishes_mod_p2(self):
        table = harmonic_table(PrimePowerModulus(11, 2))
        assert table.value(3) == 0

    def test_p5_penultimate_value(self):
        verdicts = {v.case: v for v in check_harmonic_congruences(5)}
        v = verdicts["harmonic.h_p_minus_2"]
        assert v.passed and v.lhs == 15

    def test_p7_boundary_pair_equals_minus_p3_over_4(self):
        # exact oracle: H_3 - 2*7*H_4 + 343/4 has 7-adic valuation >= 4
        h = harmonic_numbers_exact(7)
        diff = h[3] - 2 * 7 * h[4] + Fraction(343, 4)
        assert diff.numerator % 7**4 == 0
        verdicts = {v.case: v for v in check_harmonic_congruences(7)}
        v = verdicts["harmonic.pair_boundary"]
        assert v.passed
        assert v.rhs == residue_of_rational(-Fraction(343, 4), PrimePowerModulus(7, 4)).value

    def test_boundary_pair_also_holds_at_p5(self):
        verdicts = {v.case: v for v in check_harmonic_congruences(5)}
        assert verdicts["harmonic.pair_boundary"].passed

    def test_boundary_pair_skipped_at_p3(self):
        verdicts = {v.case: v for v in check_harmonic_congruences(3)}
        assert verdicts["harmonic.pair_boundary"].skipped

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_suite_all_pass(self, p):
        assert_all_pass(check_harmonic_congruences(p))


class TestPowerSumCongruences:
    def test_p7_pair_valuation_is_exactly_four(self):
        # 2 S_1 + p S_2 = 55223/3600 at p = 7; 55223 = 23 * 7^4, so the pair
        # vanishes mod p^4 but not mod p^5 (its p-multiple is the p^5 case)
        t = 2 * power_sum_exact(7, 1) + 7 * power_sum_exact(7, 2)
        assert t == Fraction(55223, 3600)
        assert t.numerator % 7**4 == 0 and t.numerator % 7**5 != 0
        assert (7 * t).numerator % 7**5 == 0

    def test_p5_pair_hits_the_correction_term(self):
        # p-1 divides m+3 at m = 1, so the mod p^4 value is -p^3/2
        t = 2 * power_sum_exact(5, 1) + 5 * power_sum_exact(5, 2)
        assert (t + Fraction(125, 2)).numerator % 5**4 == 0

    def test_p11_triple_vanishes_mod_p6(self):
        t = (
            power_sum_exact(11, 1)
            + Fraction(11, 2) * power_sum_exact(11, 2)
            + Fraction(121, 6) * power_sum_exact(11, 3)
        )
        assert t.numerator % 11**6 == 0

    def test_triple_also_holds_at_p5(self):
        # p = 5 satisfies the divisibility condition (4 does not divide 6)
        # even though it sits below the usual application range
        verdicts = {v.case: v for v in check_power_sum_congruences(5)}
        v = verdicts["power_sum.triple_mod_p6[m=1]"]
        assert v.passed

    def test_triple_skip_reason_recorded(self):
        verdicts = {v.case: v for v in check_power_sum_congruences(7)}
        v = verdicts["power_sum.triple_mod_p6[m=1]"]
        assert v.skipped and "divides m+5" in v.reason

    def test_divisibility_branches_both_hit(self):
        verdicts = check_power_sum_congruences(7)
        minus_one = [
            v for v in verdicts if v.case.startswith("power_sum.mod_p[") and v.rhs != 0
        ]
        zero = [
            v for v in verdicts if v.case.startswith("power_sum.mod_p[") and v.rhs == 0
        ]
        assert minus_one and zero

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_suite_all_pass(self, p):
        assert_all_pass(check_power_sum_congruences(p))
