import math
import random
from fractions import Fraction
from math import factorial

import pytest

from starkbeta.padic import (PadicNumber, UnitModRoots, exp_extended,
                             exp_small, log_iwasawa, padic_from_rational,
                             padic_from_rational_abs, star, teichmuller)

PRIMES = (3, 5, 7)


class TestFromRational:
    def test_one_third_mod_5_4(self):
        x = padic_from_rational(Fraction(1, 3), 5, 4)
        assert (x.v, x.unit) == (0, 417)  # inverse of 3 mod 625

    def test_zero_is_exact(self):
        z = padic_from_rational(0, 5, 4)
        assert z.is_exact_zero
        assert z.valuation == math.inf

    def test_ten_base_5(self):
        x = padic_from_rational(10, 5, 4)
        assert (x.v, x.unit) == (1, 2)

    def test_rejects_even_or_composite(self):
        with pytest.raises(ValueError):
            padic_from_rational(1, 2, 4)
        with pytest.raises(ValueError):
            padic_from_rational(1, 9, 4)


class TestArithmeticPrecision:
    def test_multiplication_tracks_relative(self):
        a = padic_from_rational(Fraction(1, 3), 5, 4)
        b = padic_from_rational(7, 5, 8)
        assert (a * b).n == 4

    def test_cancellation_returns_inexact_zero(self):
        a = padic_from_rational(7, 5, 4)
        d = a - padic_from_rational(7, 5, 4)
        assert d.is_zero and not d.is_exact_zero
        assert d.abs_prec == 4

    def test_addition_valuation_jump(self):
        a = padic_from_rational(1, 5, 4)
        b = padic_from_rational(24, 5, 4)
        s = a + b  # 25 = 5^2 * 1
        assert s.valuation == 2 and s.abs_prec == 4

    def test_division_by_possible_zero_rejected(self):
        a = padic_from_rational(1, 5, 4)
        with pytest.raises(ZeroDivisionError):
            a / PadicNumber.zero_to(5, 4)

    def test_representative_requires_integer(self):
        x = padic_from_rational(Fraction(1, 5), 5, 4)
        with pytest.raises(ValueError):
            x.representative()

    def test_rendering(self):
        x = padic_from_rational(-2, 5, 12)
        assert str(x) == "-2 + O(5^12)"
        y = padic_from_rational(10, 5, 4)
        assert str(y) == "2 * 5^1 + O(5^5)"


class TestTeichmuller:
    def test_fixed_point_one(self):
        assert teichmuller(padic_from_rational(1, 5, 6)).unit == 1

    def test_minus_one(self):
        for p in PRIMES:
            w = teichmuller(padic_from_rational(-1, p, 6))
            assert w.same(padic_from_rational(-1, p, 6))

    def test_omega_two_mod_25(self):
        w = teichmuller(padic_from_rational(2, 5, 2))
        assert w.unit == 7
        assert pow(7, 4, 25) == 1

    def test_order_divides_p_minus_1(self):
        rng = random.Random(0)
        for p in PRIMES:
            for _ in range(30):
                u = rng.randrange(1, p**10)
                if u % p == 0:
                    continue
                w = teichmuller(padic_from_rational(u, p, 10))
                assert (w ** (p - 1) - 1).vanishes_to(10)

    def test_rejects_nonunit(self):
        with pytest.raises(ValueError):
            teichmuller(padic_from_rational(5, 5, 4))


class TestStar:
    def test_star_of_p_is_one(self):
        assert star(padic_from_rational(5, 5, 6)).same(1)

    def test_star_kills_torsion(self):
        w = teichmuller(padic_from_rational(3, 7, 8))
        assert star(w).same(1)

    def test_star_of_two(self):
        s = star(padic_from_rational(2, 5, 6))
        assert s.unit % 5 == 1
        # star(2) = 2 * omega(2)^-1
        expected = padic_from_rational(2, 5, 6) / teichmuller(
            padic_from_rational(2, 5, 6))
        assert (s - expected).vanishes_to(6)

    def test_reconstruction(self):
        rng = random.Random(1)
        for p in PRIMES:
            for _ in range(25):
                u = rng.randrange(1, p**10)
                if u % p == 0:
                    continue
                v = rng.randrange(-3, 4)
                z = padic_from_rational(u, p, 10).shift(v)
                back = (teichmuller(z.unit_part()) * star(z)).shift(v)
                assert (back - z).vanishes_to(v + 10)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            star(padic_from_rational(0, 5, 4))


class TestLogExp:
    def test_log_of_one_and_p(self):
        assert log_iwasawa(padic_from_rational(1, 5, 8)).vanishes_to(8)
        assert log_iwasawa(padic_from_rational(5, 5, 8)).vanishes_to(8)

    def test_log_5_of_6_against_partial_sums(self):
        # independent oracle: exact rational partial sums of -(-5)^k / k
        acc = Fraction(0)
        for k in range(1, 12):
            acc += Fraction(-((-5) ** k), k)
        oracle = padic_from_rational_abs(acc, 5, 4)
        got = log_iwasawa(padic_from_rational(6, 5, 8), prec=4)
        assert (got - oracle).vanishes_to(4)

    def test_exp_of_zero(self):
        assert exp_small(padic_from_rational(0, 5, 6), prec=6).same(1)

    def test_exp_5_of_5_against_partial_sums(self):
        acc = Fraction(0)
        for n in range(0, 12):
            acc += Fraction(5**n, factorial(n))
        oracle = padic_from_rational_abs(acc, 5, 4)
        got = exp_small(padic_from_rational(5, 5, 8), prec=4)
        assert (got - oracle).vanishes_to(4)

    def test_exp_rejects_small_valuation(self):
        with pytest.raises(ValueError):
            exp_small(padic_from_rational(2, 5, 6))

    def test_round_trips(self):
        rng = random.Random(2)
        for p in PRIMES:
            for _ in range(20):
                u = rng.randrange(1, p**12)
                if u % p == 0:
                    continue
                z = padic_from_rational(u, p, 12)
                assert (exp_small(log_iwasawa(z)) - star(z)).vanishes_to(12)
                w = PadicNumber.from_int_abs(p * rng.randrange(1, p**11),
                                             p, 12)
                if w.is_zero:
                    continue
                assert (log_iwasawa(exp_small(w)) - w).vanishes_to(12)

    def test_log_homomorphism_200_pairs_per_prime(self):
        rng = random.Random(3)
        for p in PRIMES:
            for _ in range(200):
                a = padic_from_rational(_unit(rng, p, 10), p, 10)
                b = padic_from_rational(_unit(rng, p, 10), p, 10)
                d = log_iwasawa(a * b) - log_iwasawa(a) - log_iwasawa(b)
                assert d.vanishes_to(10)

    def test_truncation_stable_when_inputs_are_refined(self):
        # recomputing with more digits (hence more series terms) changes
        # nothing at the lower precision, for both log and exp
        a8 = log_iwasawa(padic_from_rational(6, 5, 8))
        a14 = log_iwasawa(padic_from_rational(6, 5, 14))
        assert (a14 - a8).vanishes_to(8)
        e8 = exp_small(padic_from_rational(10, 5, 8))
        e14 = exp_small(padic_from_rational(10, 5, 14))
        assert (e14 - e8).vanishes_to(8)


def _unit(rng, p, n):
    u = rng.randrange(1, p**n)
    while u % p == 0:
        u = rng.randrange(1, p**n)
    return u


class TestFuzzAgainstExactRationals:
    def test_field_ops_agree_with_fraction_images(self):
        # whatever digits an operation claims must match the exact value
        rng = random.Random(9)
        for p in PRIMES:
            for _ in range(120):
                qa = Fraction(rng.randrange(-300, 301), rng.randrange(1, 80))
                qb = Fraction(rng.randrange(-300, 301), rng.randrange(1, 80))
                if qa == 0 or qb == 0:
                    continue
                za = padic_from_rational(qa, p, 9)
                zb = padic_from_rational(qb, p, 12)
                cases = [(qa + qb, za + zb), (qa - qb, za - zb),
                         (qa * qb, za * zb), (qa / qb, za / zb),
                         (qa**3, za**3)]
                for exact, got in cases:
                    ap = got.abs_prec
                    image = padic_from_rational_abs(exact, p, ap)
                    d = got - image
                    assert d.is_zero, (p, qa, qb, exact, str(got))


class TestExpExtended:
    def test_identity_class(self):
        c = exp_extended(padic_from_rational(0, 5, 6))
        assert c.valuation == 0 and c.log.is_exact_zero

    def test_forced_log_at_1_over_p(self):
        z = padic_from_rational(Fraction(1, 5), 5, 8)
        c = exp_extended(z)
        assert c.valuation == 0 and c.log == z

    def test_homomorphism_componentwise(self):
        rng = random.Random(4)
        for p in PRIMES:
            for _ in range(25):
                z1 = padic_from_rational(
                    Fraction(_unit(rng, p, 8), p ** rng.randrange(0, 3)), p, 8)
                z2 = padic_from_rational(
                    Fraction(_unit(rng, p, 8), p ** rng.randrange(0, 3)), p, 8)
                lhs = exp_extended(z1) + exp_extended(z2)
                rhs = exp_extended(z1 + z2)
                assert lhs.valuation == rhs.valuation
                assert (lhs.log - rhs.log).vanishes_to(rhs.log.abs_prec)


class TestUnitModRoots:
    def test_class_of_rational(self):
        c = UnitModRoots.of_rational(Fraction(50, 9), 5, 8)
        assert c.valuation == 2

    def test_group_law(self):
        a = UnitModRoots.of_rational(6, 5, 8)
        b = UnitModRoots.of_rational(Fraction(1, 6), 5, 8)
        s = a + b
        assert s.valuation == 0 and s.log.vanishes_to(8)
        assert (-a).matches(b, 8)
