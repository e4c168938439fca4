"""Arbitrary-precision real/complex side, backed by mpmath.

Gamma and beta at rationals, the Hurwitz zeta sum zeta(s,v,z) =
sum (z+vn)^(-s) by Euler-Maclaurin with the exact Bernoulli cache, its
s-derivative at 0 (closed form and a Richardson finite-difference
oracle), Stark units over Q by two routes, the beta-product
decomposition of gamma pairs, and PSLQ-based algebraic recognition.

Precision is passed explicitly as decimal digits D; functions run at
D plus guard digits and never touch the caller's mpmath context outside
`mpmath.workdps` blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp

from .bernoulli import bernoulli_number

DEFAULT_DIGITS = 60


class InsufficientPrecisionError(ValueError):
    """Raised when a recognition task needs more working digits."""


def _to_mpf(q):
    q = Fraction(q)
    return mp.mpf(q.numerator) / q.denominator


def gamma_real(q, D: int = DEFAULT_DIGITS):
    """Gamma(q) for rational q > 0, to D digits."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("gamma_real needs a positive argument")
    with mpmath.workdps(D + 10):
        return mp.gamma(_to_mpf(q))


def _gamma_any(q, D: int):
    """Meromorphic gamma at any non-pole rational (beta-product factors
    step outside (0,1))."""
    q = Fraction(q)
    if q <= 0 and q.denominator == 1:
        raise ValueError(f"gamma pole at {q}")
    with mpmath.workdps(D + 10):
        return mp.gamma(_to_mpf(q))


def beta_real(alpha, beta, D: int = DEFAULT_DIGITS):
    """B(alpha, beta) = Gamma(alpha) Gamma(beta) / Gamma(alpha+beta)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("beta_real needs positive arguments")
    with mpmath.workdps(D + 10):
        return (mp.gamma(_to_mpf(alpha)) * mp.gamma(_to_mpf(beta))
                / mp.gamma(_to_mpf(alpha + beta)))


def _beta_any(alpha, beta, D: int):
    alpha, beta = Fraction(alpha), Fraction(beta)
    with mpmath.workdps(D + 10):
        return _gamma_any(alpha, D) * _gamma_any(beta, D) \
            / _gamma_any(alpha + beta, D)


# -- Hurwitz zeta --------------------------------------------------------------


def _hurwitz_em(s, q, dps: int):
    """zeta_H(s, q) = sum_{k>=0} (q+k)^(-s) by Euler-Maclaurin at dps
    working digits; s real != 1, q > 0."""
    with mpmath.workdps(dps + 10):
        s = mp.mpf(s)
        q = _to_mpf(q)
        terms = int(1.2 * dps) + 20
        jmax = int(0.7 * dps) + 10
        acc = mp.mpf(0)
        for k in range(terms):
            acc += (q + k) ** (-s)
        w = q + terms
        acc += w ** (1 - s) / (s - 1) + w ** (-s) / 2
        # corrections B_{2j}/(2j)! (s)_{2j-1} w^(-s-2j+1)
        poch = s
        wpow = w ** (-s - 1)
        wi2 = 1 / (w * w)
        fact = mp.mpf(2)
        term = mp.mpf(0)
        for j in range(1, jmax + 1):
            b = bernoulli_number(2 * j)
            term = (mp.mpf(b.numerator) / b.denominator) / fact * poch * wpow
            acc += term
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            wpow *= wi2
            fact *= (2 * j + 1) * (2 * j + 2)
        if abs(term) > mp.mpf(10) ** (-(dps - 5)):
            raise ArithmeticError(
                "Euler-Maclaurin tail did not clear the precision target")
        return +acc


def hurwitz_zeta(s, v, z, D: int = DEFAULT_DIGITS):
    """zeta(s, v, z) = sum_{n>=0} (z + v n)^(-s) for v, z > 0, s != 1,
    with error below 10^-(D+5)."""
    v, z = Fraction(v), Fraction(z)
    if v <= 0 or z <= 0:
        raise ValueError("need v, z > 0")
    with mpmath.workdps(D + 15):
        s = mp.mpf(s)
        if s == 1:
            raise ValueError("pole at s = 1")
        return v ** (-s) * _hurwitz_em(s, z / v, D + 15)


def _zeta_deriv0_oracle(m, a, D: int):
    """d/ds zeta(s, m, a) at s = 0 by Richardson-extrapolated central
    differences with step 10^(-D/4) and 3 extrapolation levels."""
    dps = int(2.6 * D) + 15
    with mpmath.workdps(dps):
        h0 = mp.mpf(10) ** (-(D // 4))
        diffs = []
        for i in range(4):
            h = h0 / 2**i
            f_plus = hurwitz_zeta(h, m, a, dps - 15)
            f_minus = hurwitz_zeta(-h, m, a, dps - 15)
            diffs.append((f_plus - f_minus) / (2 * h))
        # Richardson in h^2
        table = [diffs]
        for j in range(1, 4):
            prev = table[-1]
            fac = mp.mpf(4) ** j
            table.append([(fac * prev[i + 1] - prev[i]) / (fac - 1)
                          for i in range(len(prev) - 1)])
        return table[-1][0]


def hurwitz_zeta_deriv0(m, a, D: int = DEFAULT_DIGITS):
    """zeta'(0, m, a) two ways: (closed form, finite-difference oracle).

    Closed form: log Gamma(a/m) - log(2 pi)/2 - zeta(0,m,a) log m, with
    zeta(0,m,a) = 1/2 - a/m.
    """
    m, a = Fraction(m), Fraction(a)
    if not (0 < a <= m):
        raise ValueError("need 0 < a <= m")
    with mpmath.workdps(D + 10):
        closed = (mp.log(mp.gamma(_to_mpf(a / m)))
                  - mp.log(2 * mp.pi) / 2
                  - (mp.mpf(1) / 2 - _to_mpf(a / m)) * mp.log(_to_mpf(m)))
        oracle = _zeta_deriv0_oracle(m, a, D)
        return +closed, +oracle


# -- Stark units over Q --------------------------------------------------------


def _check_stark_args(a: int, m: int) -> None:
    if m < 3:
        raise ValueError("conductor must be >= 3")
    if not 0 < a < Fraction(m, 2):
        raise ValueError("need 0 < a < m/2")
    if gcd(a, m) != 1:
        raise ValueError("need gcd(a, m) = 1")


def stark_unit_real_routes(a: int, m: int, D: int = DEFAULT_DIGITS):
    """u_Q(sigma_{a/m}) two ways: the squared 2pi/(Gamma Gamma) quotient,
    and exp(-2 zeta'(0, sigma)) with the numeric-differentiation oracle."""
    _check_stark_args(a, m)
    with mpmath.workdps(D + 15):
        g = mp.gamma(_to_mpf(Fraction(a, m))) * mp.gamma(_to_mpf(Fraction(m - a, m)))
        quotient = (2 * mp.pi / g) ** 2
        d1 = _zeta_deriv0_oracle(m, a, D)
        d2 = _zeta_deriv0_oracle(m, m - a, D)
        zeta_route = mp.e ** (-2 * (d1 + d2))
        return +quotient, +zeta_route


def stark_unit_real(a: int, m: int, D: int = DEFAULT_DIGITS):
    """u_Q(sigma_{a/m}) = (2 pi / (Gamma(a/m) Gamma((m-a)/m)))^2."""
    _check_stark_args(a, m)
    with mpmath.workdps(D + 15):
        g = mp.gamma(_to_mpf(Fraction(a, m))) * mp.gamma(_to_mpf(Fraction(m - a, m)))
        return +((2 * mp.pi / g) ** 2)


# -- beta-product decomposition of gamma pairs ---------------------------------


@dataclass(frozen=True)
class BetaFactor:
    """(coef * prod B(x,x) over betas)^exponent; coef None means 1."""

    coef: Fraction | None
    betas: tuple
    exponent: int


@dataclass(frozen=True)
class BetaProductExpr:
    """Symbolic decomposition of (Gamma(a/m) Gamma((m-a)/m))^lhs_exponent
    into beta values and rational prefactors, up to an overall sign."""

    a: int
    m: int
    t: int
    m0: int
    f: int | None
    lhs_exponent: int
    factors: tuple


def _order_of_2(m0: int) -> int:
    f = 1
    r = 2 % m0
    while r != 1:
        r = 2 * r % m0
        f += 1
    return f


def decompose_gamma_product(a: int, m: int) -> BetaProductExpr:
    """Decompose (Gamma(a/m) Gamma((m-a)/m))^E into beta factors.

    For m = 2^t m0 with m0 > 1 this is the halving telescope through the
    odd part (E = 2^t (2^f - 1), f the order of 2 mod m0). For m = 2^t
    the telescope anchors at B(a/2^k0, 1 - a/2^k0) with 2^(k0-1) < a <
    2^k0 (E = 2^(t-1)); a = 1 recovers the lone B(1/2,1/2) anchor.
    """
    if not (0 < a < m):
        raise ValueError("need 0 < a < m")
    if gcd(a, m) != 1:
        raise ValueError("need gcd(a, m) = 1")
    t = 0
    m0 = m
    while m0 % 2 == 0:
        m0 //= 2
        t += 1
    factors = []
    if m0 > 1:
        f = _order_of_2(m0)
        E = 2**t * (2**f - 1)
        for k in range(1, t + 1):
            den = 2**k * m0
            x = Fraction(a, den)
            y = Fraction(den - a, den)
            factors.append(BetaFactor(Fraction(2 ** (k - 1) * m0 - a,
                                               2 ** (k - 1) * m0),
                                      ((x, x), (y, y)),
                                      2 ** (k - 1) * (2**f - 1)))
        for l in range(f):
            x = Fraction(2**l * a, m0)
            y = Fraction(m0 - 2**l * a, m0)
            factors.append(BetaFactor(Fraction(m0 - 2 ** (l + 1) * a, m0),
                                      ((x, x), (y, y)),
                                      2 ** (f - 1 - l)))
        return BetaProductExpr(a, m, t, m0, f, E, tuple(factors))
    # power-of-two conductor
    E = 2 ** (t - 1)
    k0 = a.bit_length()
    x0 = Fraction(a, 2**k0)
    factors.append(BetaFactor(None, ((x0, 1 - x0),), 2 ** (k0 - 1)))
    for k in range(k0 + 1, t + 1):
        x = Fraction(a, 2**k)
        y = Fraction(2**k - a, 2**k)
        factors.append(BetaFactor(Fraction(2 ** (k - 1) - a, 2 ** (k - 1)),
                                  ((x, x), (y, y)),
                                  2 ** (k - 2)))
    return BetaProductExpr(a, m, t, 1, None, E, tuple(factors))


def verify_beta_product(expr: BetaProductExpr, D: int = DEFAULT_DIGITS):
    """Evaluate both sides; returns (sign in {+1,-1}, relative residual
    |LHS -+ RHS| / |LHS|)."""
    with mpmath.workdps(D + 30):
        lhs = (mp.gamma(_to_mpf(Fraction(expr.a, expr.m)))
               * mp.gamma(_to_mpf(Fraction(expr.m - expr.a, expr.m)))
               ) ** expr.lhs_exponent
        rhs = mp.mpf(1)
        for fac in expr.factors:
            val = mp.mpf(1) if fac.coef is None else _to_mpf(fac.coef)
            for (x, y) in fac.betas:
                val *= _beta_any(x, y, D + 20)
            rhs *= val ** fac.exponent
        plus = abs(lhs - rhs)
        minus = abs(lhs + rhs)
        sign = 1 if plus <= minus else -1
        residual = min(plus, minus) / abs(lhs)
        return sign, +residual


# -- algebraic recognition ------------------------------------------------------


def recognize_algebraic(x, degree_bound: int, height_bound: int,
                        D: int = DEFAULT_DIGITS):
    """PSLQ integer-relation search over 1, x, x^2, ...

    Returns a primitive integer polynomial (ascending coefficients,
    positive leading) with |P(x)| < 10^(-D/2), or None. Refuses when D
    is too small for the search space; success is evidence, not proof.
    """
    needed = 3 * degree_bound * len(str(int(height_bound)))
    if D < needed:
        raise InsufficientPrecisionError(
            f"need at least D = {needed} digits for degree {degree_bound} "
            f"and height {height_bound}")
    with mpmath.workdps(D + 10):
        xm = mp.mpf(x)
        threshold = mp.mpf(10) ** (-(D // 2))
        powers = [mp.mpf(1)]
        for d in range(1, degree_bound + 1):
            powers.append(powers[-1] * xm)
            rel = mpmath.pslq(powers, tol=mp.mpf(10) ** (-(D - 8)),
                              maxcoeff=int(height_bound), maxsteps=20000)
            if rel is None:
                continue
            while rel and rel[-1] == 0:
                rel = rel[:-1]
            if len(rel) < 2:
                continue
            value = mp.fsum(c * powers[k] for k, c in enumerate(rel))
            if abs(value) >= threshold:
                continue
            if max(abs(c) for c in rel) > height_bound:
                continue
            g = 0
            for c in rel:
                g = gcd(g, c)
            rel = [c // g for c in rel]
            if rel[-1] < 0:
                rel = [-c for c in rel]
            return tuple(rel)
    return None
