from fractions import Fraction
from math import gcd

import mpmath
import pytest
from mpmath import mp

from starkbeta.classical import (InsufficientPrecisionError, beta_real,
                                 decompose_gamma_product, gamma_real,
                                 hurwitz_zeta, hurwitz_zeta_deriv0,
                                 recognize_algebraic, stark_unit_real,
                                 stark_unit_real_routes, verify_beta_product)

D = 60


def _tol(k):
    return mp.mpf(10) ** (-k)


class TestGammaBeta:
    def test_gamma_one(self):
        with mpmath.workdps(D):
            assert abs(gamma_real(1, D) - 1) < _tol(D - 5)

    def test_gamma_half_is_sqrt_pi(self):
        with mpmath.workdps(D + 10):
            assert abs(gamma_real(Fraction(1, 2), D) - mp.sqrt(mp.pi)) < _tol(D - 5)

    def test_beta_trivials(self):
        with mpmath.workdps(D + 10):
            assert abs(beta_real(1, 1, D) - 1) < _tol(D - 5)
            assert abs(beta_real(Fraction(1, 2), Fraction(1, 2), D) - mp.pi) < _tol(D - 5)
            assert abs(beta_real(Fraction(1, 3), Fraction(2, 5), D)
                       - beta_real(Fraction(2, 5), Fraction(1, 3), D)) == 0

    def test_reflection_functional_duplication(self):
        with mpmath.workdps(D + 10):
            for q in (Fraction(1, 3), Fraction(2, 7), Fraction(5, 12)):
                g = gamma_real(q, D) * gamma_real(1 - q, D)
                qi = mp.mpf(q.numerator) / q.denominator
                assert abs(g * mp.sin(mp.pi * qi) / mp.pi - 1) < _tol(D - 10)
                assert abs(gamma_real(q + 1, D) / (qi * gamma_real(q, D)) - 1) \
                    < _tol(D - 10)
                dup = gamma_real(2 * q, D) * mp.sqrt(2 * mp.pi) / (
                    2 ** (2 * qi - mp.mpf(1) / 2) * gamma_real(q, D)
                    * gamma_real(q + Fraction(1, 2), D))
                assert abs(dup - 1) < _tol(D - 10)

    def test_doubling_digits_is_stable(self):
        with mpmath.workdps(2 * D + 10):
            a = gamma_real(Fraction(1, 7), D)
            b = gamma_real(Fraction(1, 7), 2 * D)
            assert abs(a - b) < _tol(D - 10)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gamma_real(0, D)
        with pytest.raises(ValueError):
            beta_real(Fraction(-1, 2), 1, D)


class TestHurwitz:
    def test_basel(self):
        with mpmath.workdps(D + 10):
            assert abs(hurwitz_zeta(2, 1, 1, D) - mp.pi**2 / 6) < _tol(D - 10)

    def test_zero_value_one_third(self):
        with mpmath.workdps(D + 10):
            assert abs(hurwitz_zeta(0, 3, 1, D) - Fraction(1, 6)) < _tol(D - 10)

    def test_zero_value_grid(self):
        with mpmath.workdps(D + 10):
            for m in range(1, 13):
                for a in range(1, m + 1):
                    got = hurwitz_zeta(0, m, a, D)
                    want = mp.mpf(1) / 2 - mp.mpf(a) / m
                    assert abs(got - want) < _tol(50)

    def test_pole_rejected(self):
        with pytest.raises(ValueError):
            hurwitz_zeta(1, 3, 1, D)

    def test_deriv0_m1(self):
        closed, oracle = hurwitz_zeta_deriv0(1, 1, D)
        with mpmath.workdps(D + 10):
            target = -mp.log(2 * mp.pi) / 2
            assert abs(closed - target) < _tol(D - 10)
            assert abs(oracle - target) < _tol(D / 2)

    def test_deriv0_exp_is_positive(self):
        closed, _ = hurwitz_zeta_deriv0(7, 3, D)
        with mpmath.workdps(D):
            assert mp.e**closed > 0

    def test_deriv0_routes_agree_grid(self):
        with mpmath.workdps(D + 10):
            for m in range(1, 13):
                for a in range(1, m + 1):
                    closed, oracle = hurwitz_zeta_deriv0(m, a, D)
                    assert abs(closed - oracle) < _tol(D / 2)


class TestStark:
    def test_special_values(self):
        with mpmath.workdps(D + 10):
            assert abs(stark_unit_real(1, 3, D) - 3) < _tol(50)
            assert abs(stark_unit_real(1, 4, D) - 2) < _tol(50)
            assert abs(stark_unit_real(1, 6, D) - 1) < _tol(50)

    def test_routes_agree(self):
        with mpmath.workdps(D + 10):
            for (a, m) in ((1, 5), (2, 7), (5, 12) if gcd(5, 12) == 1 else (1, 12)):
                r1, r2 = stark_unit_real_routes(a, m, D)
                assert abs(r1 - r2) < _tol(30)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            stark_unit_real(2, 4, D)
        with pytest.raises(ValueError):
            stark_unit_real(1, 2, D)


class TestBetaProducts:
    def test_example_1_3_structure(self):
        e = decompose_gamma_product(1, 3)
        assert (e.t, e.m0, e.f) == (0, 3, 2)
        assert e.lhs_exponent == 3  # 2^0 (2^2 - 1)
        assert len(e.factors) == 2
        coefs = [f.coef for f in e.factors]
        assert coefs == [Fraction(1, 3), Fraction(-1, 3)]
        assert [f.exponent for f in e.factors] == [2, 1]

    def test_example_1_2_single_beta(self):
        e = decompose_gamma_product(1, 2)
        assert e.lhs_exponent == 1
        assert len(e.factors) == 1
        assert e.factors[0].coef is None
        assert e.factors[0].betas == ((Fraction(1, 2), Fraction(1, 2)),)

    def test_example_1_4(self):
        e = decompose_gamma_product(1, 4)
        assert e.lhs_exponent == 2
        assert e.factors[0].betas == ((Fraction(1, 2), Fraction(1, 2)),)
        assert e.factors[1].coef == Fraction(1, 2)
        assert e.factors[1].betas == ((Fraction(1, 4), Fraction(1, 4)),
                                      (Fraction(3, 4), Fraction(3, 4)))

    def test_power_of_two_sign_is_plus(self):
        for (a, m) in ((1, 2), (1, 4), (1, 8), (3, 8), (5, 16)):
            sign, residual = verify_beta_product(
                decompose_gamma_product(a, m), D)
            assert sign == 1
            assert residual < _tol(50)

    def test_gamma_cube_value(self):
        with mpmath.workdps(D + 10):
            lhs = beta_real(Fraction(1, 3), Fraction(1, 3), D) ** 2 \
                * beta_real(Fraction(2, 3), Fraction(2, 3), D)
            rhs = 3 * gamma_real(Fraction(1, 3), D) ** 3
            assert abs(lhs - rhs) / abs(rhs) < _tol(50)

    def test_full_grid_m16(self):
        for m in range(3, 17):
            for a in range(1, m):
                if gcd(a, m) != 1:
                    continue
                sign, residual = verify_beta_product(
                    decompose_gamma_product(a, m), D)
                assert residual < _tol(50), (a, m)

    def test_rejects_noncoprime(self):
        with pytest.raises(ValueError):
            decompose_gamma_product(2, 4)


class TestRecognition:
    def test_sqrt2(self):
        with mpmath.workdps(60):
            x = +mp.sqrt(2)
        assert recognize_algebraic(x, 4, 100, 50) == (-2, 0, 1)

    def test_stark_1_5(self):
        u = stark_unit_real(1, 5, D)
        assert recognize_algebraic(u, 4, 10**4, D) == (5, -5, 1)

    def test_pi_sentinel_fails(self):
        with mpmath.workdps(100):
            x = +mp.pi
        assert recognize_algebraic(x, 4, 10**6, 90) is None

    def test_refusal_on_insufficient_digits(self):
        with mpmath.workdps(60):
            x = +mp.sqrt(2)
        with pytest.raises(InsufficientPrecisionError):
            recognize_algebraic(x, 20, 10**10, 50)
