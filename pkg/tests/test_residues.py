"""Ring arithmetic in Z/p^m and the exact-rational helpers."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from congrlab import (
    ModulusMismatch,
    NonUnit,
    NotPInteger,
    PrimePowerModulus,
    Residue,
    Valuation,
    is_prime,
    parse_rational,
    q_add,
    q_div,
    q_mul,
    q_neg,
    rational_valuation,
    residue_of_rational,
    valuation_of_difference,
)


class TestPrimePowerModulus:
    def test_precomputes_power(self):
        m = PrimePowerModulus(5, 3)
        assert m.pm == 125

    @pytest.mark.parametrize("p", [2, 4, 9, 15, 1, 0, -7])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ValueError):
            PrimePowerModulus(p, 1)

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError):
            PrimePowerModulus(5, 0)

    def test_equality_ignores_cached_power(self):
        assert PrimePowerModulus(5, 3) == PrimePowerModulus(5, 3)
        assert PrimePowerModulus(5, 3) != PrimePowerModulus(5, 4)

    def test_large_prime_accepted(self):
        # beyond the deterministic Miller-Rabin range
        PrimePowerModulus(3_000_000_019, 1)


class TestIsPrime:
    def test_agrees_with_trial_division_below_10000(self):
        def slow(n):
            if n < 2:
                return False
            return all(n % d for d in range(2, int(n**0.5) + 1))

        for n in range(10_000):
            assert is_prime(n) == slow(n), n

    def test_carmichael_numbers_rejected(self):
        for n in (561, 1105, 1729, 2465, 2821, 6601, 8911):
            assert not is_prime(n)


class TestRingOps:
    def test_inverse_example(self):
        m = PrimePowerModulus(5, 3)
        assert m.residue(4).inv().value == 94  # 4 * 94 = 376 = 3*125 + 1

    def test_pow_example(self):
        m = PrimePowerModulus(5, 3)
        assert (m.residue(4) ** 4).value == 6  # 256 mod 125

    def test_canonical_form(self):
        m = PrimePowerModulus(7, 2)
        assert Residue(-1, m).value == 48
        assert Residue(49, m).value == 0
        assert (m.residue(40) + m.residue(30)).value == 21

    def test_int_coercion(self):
        m = PrimePowerModulus(7, 2)
        assert (m.residue(3) + 1).value == 4
        assert (1 - m.residue(3)).value == 47
        assert (2 * m.residue(30)).value == 11

    def test_mixed_moduli_rejected(self):
        a = PrimePowerModulus(5, 3).residue(2)
        b = PrimePowerModulus(5, 2).residue(2)
        c = PrimePowerModulus(7, 3).residue(2)
        for other in (b, c):
            with pytest.raises(ModulusMismatch):
                a + other
            with pytest.raises(ModulusMismatch):
                a * other

    def test_non_unit_rejected(self):
        m = PrimePowerModulus(5, 3)
        with pytest.raises(NonUnit):
            m.residue(10).inv()
        with pytest.raises(NonUnit):
            m.residue(0) ** -1

    def test_unit_group_randomized(self):
        # inv is an involution and a * inv(a) == 1, 10^4 trials per modulus
        for p, e in ((5, 3), (7, 2), (11, 5)):
            m = PrimePowerModulus(p, e)
            rng = random.Random(p * 1000 + e)
            for _ in range(10_000):
                v = rng.randrange(1, m.pm)
                if v % p == 0:
                    continue
                a = m.residue(v)
                assert (a * a.inv()).value == 1
                assert a.inv().inv() == a

    def test_reduction_compatibility(self):
        # reducing mod p^m then mod p^j equals reducing directly mod p^j
        m7 = PrimePowerModulus(5, 7)
        for v in (0, 1, 126, 5**6 + 3, 5**7 - 1):
            for j in (1, 2, 3, 6):
                direct = PrimePowerModulus(5, j).residue(v)
                assert m7.residue(v).at_exponent(j) == direct

    def test_cannot_lift(self):
        with pytest.raises(ValueError):
            PrimePowerModulus(5, 2).residue(3).at_exponent(5)


class TestResidueOfRational:
    @pytest.mark.parametrize(
        "q,p,m,expected",
        [
            (Fraction(1), 5, 3, 1),
            (Fraction(1, 2), 7, 1, 4),  # 2*4 = 8 == 1 mod 7
            (Fraction(25, 12), 5, 2, 0),  # 25 == 0 mod 25, 12 a unit
            (Fraction(5, 12), 5, 2, 15),
            (Fraction(-1, 4), 5, 3, 94 * 124 % 125),
        ],
    )
    def test_examples(self, q, p, m, expected):
        assert residue_of_rational(q, PrimePowerModulus(p, m)).value == expected

    def test_not_p_integer(self):
        with pytest.raises(NotPInteger):
            residue_of_rational(Fraction(1, 7), PrimePowerModulus(7, 1))
        with pytest.raises(NotPInteger):
            residue_of_rational(Fraction(3, 14), PrimePowerModulus(7, 5))

    @given(
        n1=st.integers(-50, 50),
        d1=st.integers(1, 50),
        n2=st.integers(-50, 50),
        d2=st.integers(1, 50),
    )
    @settings(max_examples=300)
    def test_ring_homomorphism(self, n1, d1, n2, d2):
        m = PrimePowerModulus(7, 3)
        if d1 % 7 == 0 or d2 % 7 == 0:
            return
        q1, q2 = Fraction(n1, d1), Fraction(n2, d2)
        r1, r2 = residue_of_rational(q1, m), residue_of_rational(q2, m)
        assert residue_of_rational(q1 + q2, m) == r1 + r2
        assert residue_of_rational(q1 * q2, m) == r1 * r2

    @given(v=st.integers(-(10**12), 10**12))
    @settings(max_examples=200)
    def test_canonical_range(self, v):
        m = PrimePowerModulus(11, 4)
        r = m.residue(v)
        assert 0 <= r.value < m.pm


class TestValuation:
    def test_equal_residues_report_floor(self):
        m = PrimePowerModulus(5, 7)
        v = valuation_of_difference(m.residue(42), m.residue(42))
        assert v == Valuation(7, True)
        assert str(v) == ">=7"

    def test_wolstenholme_gap(self):
        m = PrimePowerModulus(5, 7)
        assert valuation_of_difference(m.residue(126), m.residue(1)) == Valuation(3, False)

    def test_morley_gap(self):
        m = PrimePowerModulus(5, 7)
        assert valuation_of_difference(m.residue(256), m.residue(6)) == Valuation(3, False)

    def test_mismatch(self):
        with pytest.raises(ModulusMismatch):
            valuation_of_difference(
                PrimePowerModulus(5, 2).residue(1), PrimePowerModulus(5, 3).residue(1)
            )

    def test_parse_round_trip(self):
        for v in (Valuation(3, False), Valuation(6, True)):
            assert Valuation.parse(str(v)) == v

    def test_rational_valuation(self):
        assert rational_valuation(Fraction(125, 36), 5) == 3
        assert rational_valuation(Fraction(2, 25), 5) == -2
        assert rational_valuation(Fraction(0), 5) is None


class TestExactRationals:
    def test_add(self):
        assert q_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)

    def test_harmonic_sum_p5(self):
        total = Fraction(0)
        for k in range(1, 5):
            total = q_add(total, q_div(1, k))
        assert total == Fraction(25, 12)

    def test_harmonic_sum_p7(self):
        total = Fraction(0)
        for k in range(1, 7):
            total = q_add(total, q_div(1, k))
        assert total == Fraction(49, 20)

    def test_mul_neg(self):
        assert q_mul(Fraction(3, 4), Fraction(2, 9)) == Fraction(1, 6)
        assert q_neg(Fraction(-5, 3)) == Fraction(5, 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            q_div(Fraction(1), Fraction(0))

    @pytest.mark.parametrize(
        "text,expected",
        [("1/2", Fraction(1, 2)), ("-3", Fraction(-3)), (" 7/3 ", Fraction(7, 3))],
    )
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "x", "1/0", "1.5.2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)
