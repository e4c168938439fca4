"""Exact products of long integer ranges modulo p^N.

Both products below are needed at range lengths up to p^N (Morita gamma
and Coleman gamma representatives), far beyond a naive loop. Split the
range into blocks of length L = p^s with 2(s + e) >= N (e the valuation
of the step): a block's product equals (table product) * (1 + offset *
sum-of-inverses) because the square of the offset vanishes mod p^N, and
both the sum of inverses over the table and the product over all full
blocks collapse to closed forms:

  * over the units in (0, p^s], the inverse-sum is 0 mod p^(N-s) (the
    inverses permute the unit residues, whose sum over a full range of
    classes vanishes for odd p);
  * over an arithmetic progression b + r*d, the inverse-sum is
    b^(-1) p^s mod p^(s+e) (coset-sum over 1 + p^e Z).

So only the table pass and the final partial block are loops, O(p^(N/2))
in total.
"""

from __future__ import annotations

from functools import lru_cache

_DIRECT_CAP = 1 << 16


def _direct_unit_product(lo: int, hi: int, p: int, mod: int) -> int:
    """prod of k in (lo, hi], p does not divide k, mod given."""
    acc = 1
    for k in range(lo + 1, hi + 1):
        if k % p:
            acc = acc * k % mod
    return acc


@lru_cache(maxsize=None)
def _unit_block_table(p: int, N: int) -> tuple[int, int]:
    """(s, P0) with P0 = product of units in (0, p^s] mod p^N, s = ceil(N/2)."""
    s = (N + 1) // 2
    mod = p**N
    P0 = _direct_unit_product(0, p**s, p, mod)
    return s, P0


def morita_unit_product(n: int, p: int, N: int) -> int:
    """prod_{k=1,(p,k)=1}^{n-1} k mod p^N (the Morita gamma product)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    mod = p**N
    m1 = n - 1
    if m1 <= 0:
        return 1 % mod
    if m1 <= _DIRECT_CAP or p**N <= _DIRECT_CAP:
        return _direct_unit_product(0, m1, p, mod)
    s, P0 = _unit_block_table(p, N)
    B = p**s
    Q, R = divmod(m1, B)
    # each full block of B consecutive integers contributes exactly P0:
    # prod_{r unit} (cB + r) = P0 (1 + cB * sum 1/r) and the inverse-sum
    # vanishes mod p^(N-s)
    full = pow(P0, Q, mod)
    return full * _direct_unit_product(Q * B, Q * B + R, p, mod) % mod


def ap_unit_product(b: int, d: int, n: int, p: int, N: int) -> int:
    """prod_{l=0}^{n-1} (b + l*d) mod p^N, where p | d and p does not
    divide b (every factor is a unit)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if d % p:
        raise ValueError("difference must be divisible by p")
    if b % p == 0:
        raise ValueError("base must be a unit")
    mod = p**N
    if n <= 0:
        return 1 % mod
    if n <= _DIRECT_CAP or p**N <= _DIRECT_CAP:
        acc = 1
        x = b % mod
        d0 = d % mod
        for _ in range(n):
            acc = acc * x % mod
            x = (x + d0) % mod
        return acc
    e = 0
    dd = d
    while dd % p == 0:
        dd //= p
        e += 1
    s = max(1, (N + 1) // 2 - e)
    L = p**s
    # table pass
    P0 = 1
    x = b % mod
    for _ in range(L):
        P0 = P0 * x % mod
        x = (x + d) % mod
    Q, R = divmod(n, L)
    # block c multiplies the table by (1 + c L d * S1) with
    # S1 = sum (b + rd)^(-1) = b^(-1) p^s mod p^(s+e); telescoping the
    # full blocks gives 1 + L d S1 Q(Q-1)/2, all mod p^N since
    # (L d S1)^2 vanishes.
    corr = (1 + (L * d % mod) * pow(b, -1, mod) * p**s * (Q * (Q - 1) // 2)) % mod
    acc = pow(P0, Q, mod) * corr % mod
    x = (b + Q * L * d) % mod
    for _ in range(R):
        acc = acc * x % mod
        x = (x + d) % mod
    return acc


def estimated_multiplications(n: int, p: int, N: int) -> int:
    """Rough multiplication count the block algorithm will spend on a
    range of length n (used for refusal caps)."""
    if n <= _DIRECT_CAP or p**N <= _DIRECT_CAP:
        return max(n, 1)
    return 3 * p ** ((N + 1) // 2)
