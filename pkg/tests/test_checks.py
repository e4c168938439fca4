from fractions import Fraction

from starkbeta.checks import (check_alg_prime, check_bpvsbc_scalar,
                              check_btog2, check_gross_koblitz_shadow,
                              check_pi_sentinel, check_rec_exact,
                              check_rec_mod_roots, frobenius_on_fraction)


class TestFrobeniusOnFraction:
    def test_single_step(self):
        assert frobenius_on_fraction(5, Fraction(1, 3)) == Fraction(2, 3)

    def test_fixed_point(self):
        assert frobenius_on_fraction(7, Fraction(1, 3)) == Fraction(1, 3)

    def test_orbit_closes(self):
        # ord_7(3) = 6
        r = Fraction(1, 7)
        assert frobenius_on_fraction(3, r, 6) == r
        assert frobenius_on_fraction(3, r, 3) != r


class TestBtog2:
    def test_good_case_sign(self):
        rep = check_btog2(5, 3, 1, 1, 12)
        assert rep.status == "pass"
        assert rep.details["sign"] in (1, -1)

    def test_good_case_symmetric_in_ij(self):
        a = check_btog2(5, 7, 2, 3, 10)
        b = check_btog2(5, 7, 3, 2, 10)
        assert a.status == b.status == "pass"
        assert a.details["sign"] == b.details["sign"]

    def test_bad_case_class_identity(self):
        rep = check_btog2(5, 25, 1, 2, 10)
        assert rep.check == "btog2-bad"
        assert rep.status == "pass"

    def test_refusals(self):
        assert check_btog2(5, 3, 1, 2, 10).status == "refused"  # i+j = m
        assert check_btog2(5, 25, 1, 4, 10).status == "refused"  # p | i+j


class TestBpvsbc:
    def test_carry_identity_m3(self):
        rep = check_bpvsbc_scalar(5, 3, 1, 1, 10, 60)
        assert rep.status == "pass"
        assert rep.details["eps"] == 0 and rep.details["eps_prime"] == 1

    def test_grid_m12(self):
        for m in range(3, 13):
            for i in range(1, m):
                for j in range(1, m):
                    if (i + j) % m == 0:
                        continue
                    rep = check_bpvsbc_scalar(5, m, i, j, 8, 40)
                    assert rep.status == "pass", (m, i, j)
                    assert rep.details["eps"] + rep.details["eps_prime"] == 1

    def test_bad_case_star_consistency(self):
        rep = check_bpvsbc_scalar(5, 25, 1, 2, 10, 60)
        assert rep.status == "pass"
        assert rep.details["star_consistency"] is True


class TestAlgPrime:
    def test_m5_recognizes_quadratic(self):
        rep = check_alg_prime(5, 60)
        assert rep.status == "pass"
        assert rep.details["cases"][1]["recognized"] == [5, -5, 1]
        assert rep.details["cases"][2]["recognized"] == [5, -5, 1]

    def test_m3_linear(self):
        rep = check_alg_prime(3, 60)
        assert rep.status == "pass"
        assert rep.details["cases"][1]["exact"] == [-3, 1]

    def test_pi_sentinel(self):
        rep = check_pi_sentinel(60)
        assert rep.status == "pass"
        assert rep.details["recognized"] is None


class TestRecChecks:
    def test_rec_exact_row(self):
        rep = check_rec_exact(30, 7)
        assert rep.status == "pass"

    def test_rec_mod_roots_pairs(self):
        for (m, p) in ((5, 3), (3, 7), (12, 5)):
            rep = check_rec_mod_roots(m, p, 10, 50)
            assert rep.status == "pass"
            assert rep.details["exact_route"] is True
            assert int(rep.residual) >= 10

    def test_rec_mod_roots_refuses_p_dividing_m(self):
        assert check_rec_mod_roots(6, 3, 8, 40).status == "refused"


class TestGrossKoblitz:
    def test_7_3_matches(self):
        rep = check_gross_koblitz_shadow(7, 3, 1, 1, 8)
        assert rep.status == "pass"
        assert rep.details["eps"] == 0
        assert rep.details["jacobi_valuation"] == "1"
        assert rep.details["torsion_residue"] == 6

    def test_eps_one_case(self):
        rep = check_gross_koblitz_shadow(7, 3, 2, 2, 8)
        assert rep.status == "pass"
        assert rep.details["eps"] == 1
        assert rep.details["jacobi_valuation"] == "0"

    def test_refusal_when_m_does_not_divide(self):
        assert check_gross_koblitz_shadow(7, 4, 1, 1, 8).status == "refused"
