"""Unramified extensions Z_p[x]/(h) of degree f, for embedding Q(zeta_m)
p-adically when p is coprime to m but m does not divide p - 1.

h is the lexicographically first monic degree-f polynomial that is
irreducible mod p (Rabin's test), zeta_m is the Teichmuller lift of an
order-m residue, and the Frobenius is computed p-adically as the Newton
root of h at xi^p. Elements are coefficient tuples mod p^M; since the
extension is unramified, the valuation of an element is the minimum
valuation of its coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial
from .padic import _ilog, ord_int


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a, b, h, p):
    """a*b mod (h, p) for F_p[x] polynomials as coefficient lists."""
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce by monic h
    f = len(h) - 1
    for i in range(len(res) - 1, f - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(f):
                res[i - f + j] = (res[i - f + j] - c * h[j]) % p
    return _fp_trim(res[:f] + [0] * max(0, f - len(res)))


def _fp_powmod(a, e, h, p):
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, h, p)
        base = _fp_mulmod(base, base, h, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        for i in range(len(r) - 1, len(b) - 2, -1):
            c = r[i] * inv % p
            if c:
                for j in range(len(b)):
                    r[i - len(b) + 1 + j] = (r[i - len(b) + 1 + j] - c * b[j]) % p
        _fp_trim(r)
        a, b = b, r
    return a


def _is_irreducible(h, p: int) -> bool:
    """Rabin: x^(p^f) = x mod h and gcd(x^(p^(f/q)) - x, h) = 1."""
    f = len(h) - 1
    x = [0, 1]
    if _fp_trim(list(_fp_powmod(x, p**f, h, p))) != [0, 1]:
        return False
    qs = set()
    n = f
    d = 2
    while d * d <= n:
        if n % d == 0:
            qs.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        qs.add(n)
    for q in qs:
        t = _fp_powmod(x, p ** (f // q), h, p)
        t = [(ti - xi) % p for ti, xi in
             zip(t + [0] * 2, [0, 1] + [0] * len(t))][:max(len(t), 2)]
        g = _fp_gcd(h, _fp_trim(t), p)
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def _find_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree f over F_p."""
    if f == 1:
        return (0, 1)  # x itself: Z_p[x]/(x) = Z_p
    for code in range(p**f):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        h = coeffs + [1]
        if _is_irreducible(h, p):
            return tuple(h)
    raise ArithmeticError("no irreducible polynomial found")


class UnramifiedContext:
    """Arithmetic in Z_p[x]/(h), h monic irreducible of degree f mod p,
    at working precision p^M. Elements are f-tuples of ints mod p^M."""

    def __init__(self, p: int, f: int, prec: int):
        self.p = p
        self.f = f
        self.M = prec
        self.mod = p**prec
        self.h = _find_irreducible(p, f)

    # -- basics ---------------------------------------------------------------

    def zero(self):
        return (0,) * self.f

    def one(self):
        return (1,) + (0,) * (self.f - 1)

    def scalar(self, c) -> tuple:
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise ValueError("scalar denominator not a p-adic unit")
        v = c.numerator * pow(c.denominator, -1, self.mod) % self.mod
        return (v,) + (0,) * (self.f - 1)

    def add(self, a, b):
        return tuple((x + y) % self.mod for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.mod for x, y in zip(a, b))

    def mul(self, a, b):
        f, mod, h = self.f, self.mod, self.h
        res = [0] * (2 * f - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] = (res[i + j] + ai * bj) % mod
        for i in range(2 * f - 2, f - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(f):
                    res[i - f + j] = (res[i - f + j] - c * h[j]) % mod
        return tuple(res[:f])

    def pow(self, a, e: int):
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        """Inverse of a unit by lifting the residue-field inverse."""
        abar = _fp_trim([x % self.p for x in a])
        if not abar:
            raise ZeroDivisionError("not a unit")
        # extended Euclid over F_p[x]
        r0, r1 = list(self.h), abar
        s0, s1 = [], [1]
        p = self.p
        while r1:
            inv_lead = pow(r1[-1], -1, p)
            q = [0] * (len(r0) - len(r1) + 1)
            r = list(r0)
            for i in range(len(r) - 1, len(r1) - 2, -1):
                c = r[i] * inv_lead % p
                if c:
                    q[i - len(r1) + 1] = c
                    for j in range(len(r1)):
                        r[i - len(r1) + 1 + j] = (r[i - len(r1) + 1 + j]
                                                  - c * r1[j]) % p
            _fp_trim(r)
            # s = s0 - q*s1
            qs1 = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs1[i + j] = (qs1[i + j] + qi * sj) % p
            s = [(a2 - b2) % p for a2, b2 in
                 zip(s0 + [0] * max(0, len(qs1) - len(s0)),
                     qs1 + [0] * max(0, len(s0) - len(qs1)))]
            r0, r1 = r1, r
            s0, s1 = s1, _fp_trim(s)
        lead_inv = pow(r0[-1], -1, p)
        x0 = tuple((c * lead_inv) % p for c in s0[:self.f]) + \
            (0,) * max(0, self.f - len(s0))
        # Newton lift: x -> x(2 - a x)
        x = x0
        prec = 1
        while prec < self.M:
            ax = self.mul(a, x)
            two_minus = self.sub(self.scalar(2), ax)
            x = self.mul(x, two_minus)
            prec *= 2
        return x

    # -- valuation / torsion / log ---------------------------------------------

    def valuation(self, a):
        """min coefficient valuation; self.M if the element is 0 mod p^M."""
        vals = [ord_int(c, self.p) for c in a if c % self.mod]
        return min(vals) if vals else self.M

    def is_unit(self, a) -> bool:
        return any(c % self.p for c in a)

    def teichmuller(self, a):
        """The (p^f - 1)st root of unity congruent to the unit a mod p."""
        if not self.is_unit(a):
            raise ValueError("Teichmuller lift needs a unit")
        q = self.p**self.f
        t = a
        while True:
            t2 = self.pow(t, q)
            if t2 == t:
                return t
            t = t2

    def log(self, a):
        """Iwasawa log of a unit: -sum (1 - a/omega(a))^k / k, correct
        mod p^M (the series runs with guard digits to cover the
        divisions by k)."""
        if not self.is_unit(a):
            raise ValueError("log needs a unit")
        p, M = self.p, self.M
        K = max(M, 1)
        while K - _ilog(p, K) < M:
            K += 1
        guard = UnramifiedContext(p, self.f, M + _ilog(p, K) + 1)
        w = guard.teichmuller(a)
        s = guard.mul(a, guard.inv(w))
        t = guard.sub(guard.one(), s)
        acc = guard.zero()
        pw = t
        for k in range(1, K + 1):
            sk = ord_int(k, p) if k % p == 0 else 0
            kq = k // p**sk
            # pw = t^k has valuation >= k >= sk: exact coefficient shift
            shifted = tuple(c // p**sk for c in pw)
            inv_kq = pow(kq, -1, guard.mod)
            term = tuple(c * inv_kq % guard.mod for c in shifted)
            acc = guard.sub(acc, term)
            pw = guard.mul(pw, t)
        return tuple(c % self.mod for c in acc)

    # -- roots of unity and Frobenius -------------------------------------------

    def zeta_of_order(self, m: int):
        """A Teichmuller root of unity of exact multiplicative order m
        (requires m | p^f - 1); deterministic choice."""
        q = self.p**self.f
        if (q - 1) % m != 0:
            raise ValueError("m must divide p^f - 1")
        qs = set()
        n = m
        d = 2
        while d * d <= n:
            if n % d == 0:
                qs.add(d)
                while n % d == 0:
                    n //= d
            d += 1
        if n > 1:
            qs.add(n)
        for code in range(1, q):
            cand = []
            c = code
            for _ in range(self.f):
                cand.append(c % self.p)
                c //= self.p
            cand = tuple(cand)
            if not self.is_unit(cand):
                continue
            elem = self.pow(self.teichmuller(cand), (q - 1) // m)
            if all(self.pow(elem, m // quo) != self.one() for quo in qs):
                return elem
        raise ArithmeticError("no element of the requested order")

    def frobenius_of_generator(self):
        """sigma(x-class): the root of h congruent to x^p, by Newton."""
        xi = (0, 1) + (0,) * (self.f - 2) if self.f >= 2 else self.one()
        if self.f == 1:
            return xi
        y = self.pow(xi, self.p)
        h = self.h
        hprime = tuple((k * h[k]) % self.mod for k in range(1, self.f + 1))
        while True:
            hy = self._eval_poly(list(h), y)
            if all(c % self.mod == 0 for c in hy):
                break
            dy = self._eval_poly(list(hprime), y)
            y = self.sub(y, self.mul(hy, self.inv(dy)))
        return y

    def _eval_poly(self, coeffs, at):
        acc = self.zero()
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, at),
                           self.scalar(c) if not isinstance(c, tuple) else c)
        return acc

    def frobenius_map(self):
        """The ring automorphism sigma as a callable on elements."""
        sx = self.frobenius_of_generator()
        powers = [self.one()]
        for _ in range(self.f - 1):
            powers.append(self.mul(powers[-1], sx))

        def sigma(a):
            acc = self.zero()
            for i, c in enumerate(a):
                if c:
                    acc = self.add(acc, tuple(c * x % self.mod
                                              for x in powers[i]))
            return acc

        return sigma


@lru_cache(maxsize=None)
def context_for_conductor(p: int, m: int, prec: int):
    """(context, zeta) with zeta an exact order-m Teichmuller root in the
    degree-f unramified extension, f = ord_m(p); asserts Phi_m(zeta) = 0."""
    if m % p == 0:
        raise ValueError("p must be coprime to m")
    f = 1
    r = p % m
    while r != 1:
        r = r * p % m
        f += 1
    ctx = UnramifiedContext(p, f, prec)
    zeta = ctx.zeta_of_order(m)
    phi = cyclotomic_polynomial(m)
    val = ctx._eval_poly(list(phi), zeta)
    if any(c % ctx.mod for c in val):
        raise RuntimeError(
            "internal error: Phi_m does not vanish on the chosen root")
    return ctx, zeta


def embed_cyclotomic(x: CyclotomicNumber, ctx: UnramifiedContext, zeta):
    """Image of x under zeta_m -> zeta."""
    acc = ctx.zero()
    for c in reversed(x.coeffs):
        acc = ctx.add(ctx.mul(acc, zeta), ctx.scalar(c))
    return acc
