"""p-adic gamma and beta functions.

The log-gamma series LGamma(a,(a1)) (Volkenborn-style mean of
-(a1 X + a)/a1 * (1 - log_p(a1 X + a))), Morita's gamma on Z_p, the
extended gamma on Q_p - Z_p as a class mod roots of unity, Coleman's
gamma normalized to 1 on Z[1/p] in [0,1), the two p-adic beta quotients,
the Frobenius scalar factors on Fermat-curve eigenspaces, and brute-force
Jacobi sums as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .bernoulli import bernoulli_poly
from .cyclotomic import CyclotomicNumber
from .padic import (PadicNumber, UnitModRoots, _ilog, _log_principal_int,
                    _teichmuller_int, is_prime, ord_int, padic_from_rational,
                    padic_from_rational_abs)
from .products import (ap_unit_product, estimated_multiplications,
                       morita_unit_product)

COLEMAN_PRODUCT_CAP = 10**7
MORITA_PRODUCT_CAP = 3 * 10**7


def frac01(q) -> Fraction:
    """Fractional part <q> in (0, 1]."""
    q = Fraction(q)
    r = q - (q.numerator // q.denominator)
    return r if r != 0 else Fraction(1)


def epsilon(r, s) -> int:
    """The carry bit <r> + <s> - <r+s> in {0, 1}; rejects integral
    <r> + <s> (i.e. i + j = m after reduction)."""
    t = frac01(r) + frac01(s)
    if t.denominator == 1:
        raise ValueError("epsilon undefined: fractional parts sum to an integer")
    return 0 if t < 1 else 1


# -- the log-gamma series ------------------------------------------------------


@dataclass(frozen=True)
class LGammaValue:
    """A truncated LGamma(a, (p^e)) evaluation."""

    a: PadicNumber
    e: int
    value: PadicNumber


def _series_terms(M: int, e: int, p: int) -> int:
    """Smallest K with K - floor(log_p K) - e >= M (dropped terms are
    O(p^M))."""
    K = max(M + e, 1)
    while K - _ilog(p, K) - e < M:
        K += 1
    return K


def lgamma_general(a: PadicNumber, a1: PadicNumber,
                   prec: int | None = None,
                   _extra_terms: int = 0) -> PadicNumber:
    """LGamma(a, (a1)) for a unit a and a1 in pZ_p, a1 != 0.

    Series: -B_1(a/a1) - sum_{k>=1} ((-1)^k/k) *
      sum_{l=0}^k C(k,l) omega(a)^(-l) a1^l B_{l+1}(a/a1) (-1)^(k-l),
    with the inner sums in exact rationals (omega(a) folded in at guard
    precision) and dropped terms of valuation >= K - ord_p(K) - e.
    """
    p = a.p
    if a.is_zero or a.v != 0:
        raise ValueError("first argument must be a p-adic unit")
    if a1.is_zero or a1.valuation < 1:
        raise ValueError("second argument must be a nonzero element of pZ_p")
    e = a1.valuation
    justified = min(a.n - e, a1.abs_prec - 2 * e)
    M = justified if prec is None else min(prec, justified)
    if M < 1:
        raise ValueError("not enough input precision for the requested value")
    K = _series_terms(M, e, p) + _extra_terms
    Mint = M + 2 * e + _ilog(p, K) + 4
    big = p**Mint
    ahat = a.representative(Mint)
    a1hat = a1.representative(min(Mint + e, a1.abs_prec))
    x = Fraction(ahat, a1hat)
    w = pow(_teichmuller_int(ahat, p, Mint), -1, big)

    # T_l = omega(a)^(-l) * a1^l * B_{l+1}(a/a1), shared by every k >= l
    T = []
    wl = 1
    a1l = Fraction(1)
    for l in range(K + 1):
        T.append(wl * a1l * bernoulli_poly(l + 1, x))
        wl = wl * w % big
        a1l *= a1hat
    total = -bernoulli_poly(1, x)
    for k in range(1, K + 1):
        s_k = Fraction(0)
        sign = -1 if k % 2 else 1  # (-1)^(k-l) at l = 0
        for l in range(k + 1):
            c = comb(k, l) * T[l]
            s_k += -c if sign < 0 else c
            sign = -sign
        total -= Fraction((-1) ** k, k) * s_k
    return padic_from_rational_abs(total, p, M)


def lgamma(a: PadicNumber, e: int, prec: int | None = None,
           _extra_terms: int = 0) -> LGammaValue:
    """LGamma(a, (p^e)) for a unit a and e >= 1."""
    if e < 1:
        raise ValueError("e must be >= 1")
    p = a.p
    n1 = max(a.n + 2 * e + 8, prec + 3 * e + 8 if prec is not None else 0)
    a1 = padic_from_rational(p**e, p, n1)
    return LGammaValue(a, e, lgamma_general(a, a1, prec, _extra_terms))


def jx_oracle(a: PadicNumber, e: int, level: int,
              prec: int | None = None) -> PadicNumber:
    """Brute-force mean (1/p^l) sum_{n<p^l} f(n) with
    f(X) = -((p^e X + a)/p^e)(1 - log_p(p^e X + a)); converges to
    lgamma(a, e) as the level grows."""
    p = a.p
    if a.is_zero or a.v != 0:
        raise ValueError("first argument must be a p-adic unit")
    if level < 1:
        raise ValueError("level must be >= 1")
    if p**level > 10**6:
        raise ValueError("oracle level too large (p^level capped at 10^6)")
    M = max(2, a.n - e - level) if prec is None else prec
    Mint = M + e + level + 2
    big = p**Mint
    ahat = a.representative(min(Mint, a.n))
    d = p**e
    acc = 0
    for n in range(p**level):
        y = ahat + d * n
        ln = _log_of_unit_int(y, p, Mint)
        acc = (acc - y * (1 - ln)) % big
    return PadicNumber.from_int_abs(acc, p, Mint).shift(-(e + level)) \
        .at_abs_prec(M)


def _log_of_unit_int(u: int, p: int, M: int) -> int:
    """Iwasawa log of an integer unit u, as an int mod p^M."""
    w = _teichmuller_int(u, p, M)
    us = u * pow(w, -1, p**M) % p**M
    return _log_principal_int(us, p, M)


# -- Morita / extended / Coleman gamma ----------------------------------------


@lru_cache(maxsize=100000)
def _gamma_morita_int(n: int, p: int, N: int) -> int:
    """(-1)^n prod_{k<n, (p,k)=1} k mod p^N."""
    v = morita_unit_product(n, p, N)
    return (-v) % p**N if n % 2 else v


def gamma_morita(z: PadicNumber, prec: int | None = None) -> PadicNumber:
    """Morita's gamma on Z_p via the defining product at the integer
    representative n = z mod p^N."""
    p = z.p
    if not z.is_zero and z.v < 0:
        raise ValueError("Morita gamma needs a p-adic integer; use gamma_ext")
    ap = z.abs_prec
    N = prec if ap is None else (min(prec, ap) if prec is not None else ap)
    if N is None:
        raise ValueError("precision required for exact-zero input")
    n = z.representative(N)
    if estimated_multiplications(n, p, N) > MORITA_PRODUCT_CAP:
        raise ValueError("representative product too large; lower N")
    return PadicNumber.from_int_abs(_gamma_morita_int(n, p, N), p, N)


def gamma_ext(z: PadicNumber, prec: int | None = None) -> UnitModRoots:
    """Extended gamma on Q_p - Z_p as a class mod mu_infinity:
    Gamma_p(z0/p^e) = exp_p(LGamma(z0, (p^e)))."""
    if z.is_zero or z.v >= 0:
        raise ValueError("extended gamma needs negative valuation; "
                         "use gamma_morita on Z_p")
    e = -z.v
    lg = lgamma(z.unit_part(), e, prec)
    return UnitModRoots(Fraction(0), lg.value)


def fractional_p_part(z: PadicNumber) -> Fraction:
    """The tail z_p in Z[1/p] of z's expansion: z - z_p in Z_p, and
    z_p in (0,1) for v(z) < 0, else 0."""
    if z.is_zero or z.v >= 0:
        return Fraction(0)
    e = -z.v
    b = (z.unit * pow(z.p, 0)) % z.p**e  # unit mod p^e
    return Fraction(b, z.p**e)


def gamma_coleman(z: PadicNumber, prec: int | None = None) -> PadicNumber:
    """Coleman's gamma: the continuous extension of
    Gamma_col(z_p + n) = prod_{l<n} (z_p + l)^* with Gamma_col = 1 on
    Z[1/p] in [0,1); a concrete unit in Z_p."""
    p = z.p
    ap = z.abs_prec
    N = prec if ap is None else (min(prec, ap) if prec is not None else ap)
    if N is None:
        raise ValueError("precision required for exact-zero input")
    mod = p**N
    zp = fractional_p_part(z)
    if zp == 0:
        # z in Z_p: product of l^* over 1 <= l < n, i.e. over each
        # p-power layer a Morita-style unit product divided by its
        # Teichmuller part.
        n = z.representative(N)
        if estimated_multiplications(n, p, N) > COLEMAN_PRODUCT_CAP:
            raise ValueError("representative product too large; lower N")
        acc = 1
        s = 0
        while (n - 1) // p**s > 0:
            u = morita_unit_product((n - 1) // p**s + 1, p, N)
            w = _teichmuller_int(u, p, N)
            acc = acc * u * pow(w, -1, mod) % mod
            s += 1
        return PadicNumber.from_int_abs(acc, p, N)
    e = -z.valuation
    b = zp.numerator
    z0 = z - padic_from_rational(zp, p, N + e + 2)
    n = z0.representative(min(N, z0.abs_prec)) if not z0.is_exact_zero else 0
    if estimated_multiplications(n, p, N) > COLEMAN_PRODUCT_CAP:
        raise ValueError("representative product too large; lower N")
    # (z_p + l)^* = (b + l p^e) * omega(b)^(-1)
    prod = ap_unit_product(b, p**e, n, p, N)
    w = _teichmuller_int(b, p, N)
    winv = pow(w, -1, mod)
    acc = prod * pow(winv, n % (p - 1), mod) % mod
    return PadicNumber.from_int_abs(acc, p, N)


# -- beta functions ------------------------------------------------------------


def _in_zp(q: Fraction, p: int) -> bool:
    return Fraction(q).denominator % p != 0


@lru_cache(maxsize=100000)
def _gamma_at_rational(q: Fraction, p: int, N: int):
    """Gamma_p at a rational: Morita value (PadicNumber) on Z_p,
    extended class (UnitModRoots) off Z_p. Cached: values are immutable
    and the beta grids revisit the same fractions heavily."""
    if _in_zp(q, p):
        return gamma_morita(padic_from_rational(q, p, N), N)
    e = ord_int(Fraction(q).denominator, p)
    zq = padic_from_rational(q, p, N + 2 * e + 4)
    return gamma_ext(zq, N)


def beta_p_pointed(alpha, beta, p: int, N: int):
    """B_p<alpha, beta> = Gamma_p(<alpha>) Gamma_p(<beta>) /
    Gamma_p(<alpha+beta>); concrete unit when all three fractional parts
    are in Z_p, a UnitModRoots class when none are; mixed cases rejected."""
    fa, fb = frac01(alpha), frac01(beta)
    fab = frac01(Fraction(alpha) + Fraction(beta))
    flags = [_in_zp(q, p) for q in (fa, fb, fab)]
    if all(flags):
        return (gamma_morita(padic_from_rational(fa, p, N), N)
                * gamma_morita(padic_from_rational(fb, p, N), N)
                / gamma_morita(padic_from_rational(fab, p, N), N))
    if not any(flags):
        return (_gamma_at_rational(fa, p, N) + _gamma_at_rational(fb, p, N)
                - _gamma_at_rational(fab, p, N))
    raise ValueError("mixed-domain pointed beta (some arguments in Z_p, "
                     "some not) is rejected")


def beta_p(alpha, beta, p: int, N: int) -> UnitModRoots:
    """B_p(alpha, beta) = Gamma_p(alpha) Gamma_p(beta) / Gamma_p(alpha+beta)
    as a class mod mu_infinity; all three arguments must lie off Z_p."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    ab = alpha + beta
    for q in (alpha, beta, ab):
        if _in_zp(q, p):
            raise ValueError(
                "beta_p needs all of alpha, beta, alpha+beta off Z_p; "
                "use beta_p_pointed")
    return (_gamma_at_rational(alpha, p, N) + _gamma_at_rational(beta, p, N)
            - _gamma_at_rational(ab, p, N))


# -- Frobenius factors ---------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusFactor:
    """Scalar factor of the Frobenius action on the (i/m, j/m) Fermat
    eigenspace; concrete p-adic number in the good-reduction case, a
    class mod mu_infinity (valuation degree/2) in the bad case."""

    p: int
    m: int
    i: int
    j: int
    degree: int
    case: str  # "good" (p coprime to m) or "bad" (p | m)
    value: UnitModRoots
    concrete: PadicNumber | None = None


def frobenius_factor(i: int, j: int, m: int, p: int, degree: int,
                     prec: int = 12) -> FrobeniusFactor:
    if not (0 < i < m and 0 < j < m):
        raise ValueError("need 0 < i, j < m")
    if (i + j) % m == 0:
        raise ValueError("need i + j != m")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if m % p != 0:
        # good case: prod_{k=1}^{deg} (-1)^eps_k p^(1-eps_{k-1})
        #            / B_p<p^k i/m, p^k j/m>, times the <.>^eps ratio
        r = [frac01(Fraction(p**k * i, m)) for k in range(degree + 1)]
        s = [frac01(Fraction(p**k * j, m)) for k in range(degree + 1)]
        eps = [epsilon(r[k], s[k]) for k in range(degree + 1)]
        N = prec + 2
        acc = padic_from_rational(1, p, N)
        for k in range(1, degree + 1):
            bp = beta_p_pointed(r[k], s[k], p, N)
            num = padic_from_rational((-1) ** eps[k] * Fraction(p) ** (1 - eps[k - 1]), p, N)
            acc = acc * num / bp
        ratio = (frac01(r[degree] + s[degree]) ** eps[degree]
                 / frac01(r[0] + s[0]) ** eps[0])
        acc = acc * padic_from_rational(ratio, p, N)
        return FrobeniusFactor(p, m, i, j, degree, "good",
                               UnitModRoots.of(acc), acc)
    # bad case
    if p == 2:
        raise ValueError("p = 2 is not supported")
    if gcd(p, i * j * (i + j)) != 1:
        raise ValueError("bad case needs p coprime to i*j*(i+j)")
    sp = ord_int(m, p)
    if degree >= sp and degree > 0:
        raise ValueError(
            f"degree {degree} pushes the orbit into Z_p (p^{sp} || m)")
    ti = frac01(Fraction(p**degree * i, m))
    tj = frac01(Fraction(p**degree * j, m))
    value = UnitModRoots(Fraction(degree, 2),
                         PadicNumber.zero_to(p, prec))
    if degree > 0:
        value = value + beta_p(Fraction(i, m), Fraction(j, m), p, prec) \
            - beta_p(ti, tj, p, prec)
    return FrobeniusFactor(p, m, i, j, degree, "bad", value, None)


# -- Jacobi sums ---------------------------------------------------------------


@lru_cache(maxsize=None)
def least_primitive_root(p: int) -> int:
    """Smallest primitive root mod p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fact = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            fact.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fact.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fact):
            return g
    raise ArithmeticError("no primitive root found")


@lru_cache(maxsize=None)
def _dlog_table(p: int) -> tuple[int, ...]:
    g = least_primitive_root(p)
    table = [0] * p
    acc = 1
    for k in range(p - 1):
        table[acc] = k
        acc = acc * g % p
    return tuple(table)


def _jacobi_counts(p: int, m: int, i: int, j: int) -> list[int]:
    """Multiplicity of zeta_m^t in sum_x chi^i(x) chi^j(1-x)."""
    dlog = _dlog_table(p)
    counts = [0] * m
    for x in range(2, p):
        t = (i * dlog[x] + j * dlog[(1 - x) % p]) % m
        counts[t] += 1
    return counts


def jacobi_sum(p: int, m: int, i: int, j: int) -> CyclotomicNumber:
    """J(chi^i, chi^j) = sum_{x != 0,1} chi^i(x) chi^j(1-x) over F_p by
    brute force, chi(g) = zeta_m for the least primitive root g; exact
    element of Q(zeta_m)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (p - 1) % m != 0:
        raise ValueError("m must divide p - 1")
    if not (0 < i < m and 0 < j < m and i + j != m):
        raise ValueError("need 0 < i, j < m and i + j != m")
    counts = _jacobi_counts(p, m, i, j)
    acc = CyclotomicNumber.zero(m)
    for t, c in enumerate(counts):
        if c:
            acc = acc + c * CyclotomicNumber.zeta_pow(m, t)
    return acc


def cyclotomic_to_padic(x: CyclotomicNumber, p: int, prec: int) -> PadicNumber:
    """Embed Q(zeta_m) into Q_p for m | p-1 via the Teichmuller-coherent
    root zeta_m -> omega(g)^((p-1)/m), g the least primitive root."""
    m = x.m
    if (p - 1) % m != 0:
        raise ValueError("embedding into Q_p needs m | p - 1")
    g = least_primitive_root(p)
    mod = p**prec
    zhat = _teichmuller_int(pow(g, (p - 1) // m, p), p, prec)
    acc = 0
    # evaluate the power-basis vector at zhat (denominators coprime to p)
    for c in reversed(x.coeffs):
        if c.denominator % p == 0:
            raise ValueError("coefficient denominator not a p-adic unit")
        cv = c.numerator * pow(c.denominator, -1, mod) % mod
        acc = (acc * zhat + cv) % mod
    return PadicNumber.from_int_abs(acc, p, prec)


def jacobi_sum_embedded(p: int, m: int, i: int, j: int,
                        prec: int) -> PadicNumber:
    """The Jacobi sum pushed into Z_p along the Teichmuller embedding."""
    return cyclotomic_to_padic(jacobi_sum(p, m, i, j), p, prec)
