"""Exact Bernoulli numbers and Bernoulli polynomials.

Convention: "first" Bernoulli numbers, B_1 = -1/2, so that
sum_{j=0}^{n-1} C(n,j) B_j = 0 for every n >= 2.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb


class BernoulliCache:
    """Grow-on-demand table of exact Bernoulli numbers B_0, B_1, ...

    Safe for concurrent readers: the table only grows, extensions are
    idempotent, and a lock serializes them.
    """

    def __init__(self) -> None:
        self._table: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def number(self, n: int) -> Fraction:
        """B_n as an exact Fraction."""
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if n >= len(self._table):
            self._extend(n)
        return self._table[n]

    def numbers(self, n: int) -> list[Fraction]:
        """The list [B_0, ..., B_n]."""
        self.number(n)
        return self._table[: n + 1]

    def _extend(self, n: int) -> None:
        with self._lock:
            table = list(self._table)
            while len(table) <= n:
                k = len(table)
                # sum_{j<=k} C(k+1,j) B_j = 0  =>  B_k in terms of B_0..B_{k-1}
                s = sum(comb(k + 1, j) * table[j] for j in range(k))
                table.append(Fraction(-s, k + 1))
            self._table = table


BERNOULLI = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return BERNOULLI.number(n)


def bernoulli_poly(n: int, x) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k), exact for rational x."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    x = Fraction(x)
    nums = BERNOULLI.numbers(n)
    # Horner in x: coefficients C(n,k) B_k for k = n (constant in x^0 slot)
    # down to k = 0 attached to x^n.
    acc = Fraction(0)
    for k in range(n + 1):
        acc = acc * x + comb(n, k) * nums[k]
    return acc
