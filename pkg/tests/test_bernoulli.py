from fractions import Fraction
from math import comb

import pytest

from starkbeta.bernoulli import BERNOULLI, bernoulli_number, bernoulli_poly


def test_first_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_odd_vanish():
    assert all(bernoulli_number(2 * k + 1) == 0 for k in range(1, 15))


def test_recurrence_rows():
    for n in range(2, 80):
        assert sum(comb(n, j) * bernoulli_number(j) for j in range(n)) == 0


def test_poly_examples():
    assert bernoulli_poly(1, Fraction(1, 5)) == Fraction(-3, 10)
    assert bernoulli_poly(2, 0) == Fraction(1, 6)
    # B_3 at x = 1/3 against the reflection B_n(1-x) = (-1)^n B_n(x)
    assert bernoulli_poly(3, Fraction(2, 3)) == -bernoulli_poly(3, Fraction(1, 3))


def test_poly_reflection_property():
    for n in range(9):
        for x in (Fraction(1, 3), Fraction(2, 7), Fraction(5, 4)):
            assert bernoulli_poly(n, 1 - x) == (-1) ** n * bernoulli_poly(n, x)


def test_poly_shift_property():
    # B_n(x+1) = B_n(x) + n x^(n-1)
    x = Fraction(3, 7)
    for n in range(1, 10):
        assert bernoulli_poly(n, x + 1) == bernoulli_poly(n, x) + n * x ** (n - 1)


def test_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        bernoulli_poly(-2, 0)


def test_cache_list_prefix():
    nums = BERNOULLI.numbers(10)
    assert len(nums) == 11
    assert nums[4] == Fraction(-1, 30)
