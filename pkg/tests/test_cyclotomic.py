import random
from fractions import Fraction
from math import gcd

import mpmath
import pytest
from mpmath import mp

from starkbeta.cyclotomic import (CyclotomicNumber, cyclotomic_polynomial,
                                  euler_phi, galois_apply, min_poly,
                                  normalize_rep, rec_exact_check,
                                  stark_unit_exact)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Moebius-style degree consistency: sum of phi over divisors = m
    for m in (6, 12, 30):
        total = sum(euler_phi(d) for d in range(1, m + 1) if m % d == 0)
        assert total == m


def test_zeta_power_has_exact_order():
    for m in (5, 8, 12):
        z = CyclotomicNumber.zeta_pow(m, 1)
        assert (z**m).is_rational() == 1
        assert all((z**k).is_rational() != 1 for k in range(1, m))


def test_ring_axioms_random_probe():
    rng = random.Random(7)
    m = 12
    deg = euler_phi(m)
    def rand():
        return CyclotomicNumber(
            m, tuple(Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
                     for _ in range(deg)))
    for _ in range(15):
        a, b, c = rand(), rand(), rand()
        assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
        assert (a * (b + c)).coeffs == (a * b + a * c).coeffs
        assert (a * b).coeffs == (b * a).coeffs


class TestGalois:
    def test_identity(self):
        u = stark_unit_exact(1, 5)
        assert galois_apply(1, u).coeffs == u.coeffs

    def test_power_map(self):
        x = CyclotomicNumber.zeta_pow(7, 3)
        assert galois_apply(2, x).coeffs == CyclotomicNumber.zeta_pow(7, 6).coeffs

    def test_composition_group_law(self):
        rng = random.Random(1)
        m = 11
        for _ in range(8):
            s = rng.choice([t for t in range(1, m) if gcd(t, m) == 1])
            t = rng.choice([t for t in range(1, m) if gcd(t, m) == 1])
            x = CyclotomicNumber.zeta_pow(m, rng.randrange(m)) + \
                CyclotomicNumber.zeta_pow(m, rng.randrange(m))
            lhs = galois_apply(s, galois_apply(t, x))
            rhs = galois_apply(s * t % m, x)
            assert lhs.coeffs == rhs.coeffs

    def test_rejects_noncoprime(self):
        with pytest.raises(ValueError):
            galois_apply(3, CyclotomicNumber.zeta_pow(6, 1))


class TestStarkUnitExact:
    def test_small_values(self):
        assert stark_unit_exact(1, 3).is_rational() == 3
        assert stark_unit_exact(1, 6).is_rational() == 1
        u5 = stark_unit_exact(1, 5)
        assert min_poly(u5) == (5, -5, 1)

    def test_conjugation_invariant(self):
        for (a, m) in ((1, 5), (2, 7), (1, 12)):
            u = stark_unit_exact(a, m)
            assert u.conjugate().coeffs == u.coeffs

    def test_totally_positive(self):
        for (a, m) in ((1, 5), (2, 5), (3, 7), (1, 12)):
            u = stark_unit_exact(a, m)
            with mpmath.workdps(40):
                for k in range(1, m):
                    if gcd(k, m) != 1:
                        continue
                    emb = galois_apply(k, u).eval_complex(40)
                    assert abs(mp.im(emb)) < mp.mpf(10) ** -30
                    assert mp.re(emb) > 0

    def test_preconditions(self):
        with pytest.raises(ValueError):
            stark_unit_exact(2, 4)
        with pytest.raises(ValueError):
            stark_unit_exact(3, 5)  # 3 >= 5/2
        with pytest.raises(ValueError):
            stark_unit_exact(1, 2)


class TestMinPoly:
    def test_constant(self):
        x = CyclotomicNumber.from_rational(5, 3)
        assert min_poly(x) == (-3, 1)

    def test_zeta(self):
        assert min_poly(CyclotomicNumber.zeta_pow(5, 1)) == (1, 1, 1, 1, 1)

    def test_degree_bound_enforced(self):
        with pytest.raises(ValueError):
            min_poly(CyclotomicNumber.zeta_pow(11, 1), degree_bound=3)

    def test_galois_equivariance(self):
        u = stark_unit_exact(1, 5)
        assert min_poly(galois_apply(2, u)) == min_poly(u)


class TestRecExact:
    def test_m5_t2_swaps_units(self):
        rep = rec_exact_check(5, 2)
        assert rep.all_equal
        assert (1, 2, True) in rep.cases and (2, 1, True) in rep.cases

    def test_identity_and_conjugation(self):
        for m in (5, 7, 12):
            assert rec_exact_check(m, 1).all_equal
            rep = rec_exact_check(m, m - 1)
            assert rep.all_equal
            assert all(a == b for a, b, _ in rep.cases)

    def test_all_t_up_to_30(self):
        for m in range(3, 31):
            for t in range(1, m):
                if gcd(t, m) == 1:
                    assert rec_exact_check(m, t).all_equal

    def test_normalize_rep(self):
        assert normalize_rep(7, 5) == 2
        assert normalize_rep(4, 5) == 1


def test_numerical_embedding_consistency():
    # exact element evaluated at exp(2 pi i/m) matches the real route
    from starkbeta.classical import stark_unit_real
    with mpmath.workdps(50):
        for (a, m) in ((1, 5), (2, 7), (1, 12)):
            exact = stark_unit_exact(a, m).eval_complex(50)
            real = stark_unit_real(a, m, 50)
            assert abs(exact - real) < mp.mpf(10) ** -40
