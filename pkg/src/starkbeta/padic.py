"""Arbitrary-precision p-adic arithmetic for odd primes.

A nonzero value is stored as unit * p^v with the unit known modulo p^n
(n "relative digits"), i.e. the value is known to absolute precision
O(p^(v+n)). Zeros are either exact or "inexact" O(p^A) leftovers from
cancellation. Every operation reports no more precision than its inputs
justify.

Also provides the Teichmuller character, the star decomposition
z = omega * p^v * z^ star, Iwasawa's log (log p = 0, roots of unity
killed), the small-domain exponential, and the extended exponential as
a class modulo roots of unity (UnitModRoots).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond desk-scale inputs."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is not supported (odd primes only)")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


def ord_int(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _ilog(p: int, k: int) -> int:
    """floor(log_p k) for k >= 1."""
    r = 0
    while k >= p:
        k //= p
        r += 1
    return r


class PadicNumber:
    """An element of Q_p known to absolute precision O(p^(v+n)).

    Exact zero: unit == 0, v is None. Inexact zero O(p^A): unit == 0,
    v == A, n == 0.
    """

    __slots__ = ("p", "v", "unit", "n")

    def __init__(self, p: int, v, unit: int, n: int, _checked: bool = False):
        if not _checked:
            _check_odd_prime(p)
            if unit != 0:
                if n < 1:
                    raise ValueError("relative precision must be >= 1")
                unit %= p**n
                if unit % p == 0:
                    raise ValueError("unit must be coprime to p")
        self.p = p
        self.v = v
        self.unit = unit
        self.n = n

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact_zero(cls, p: int) -> "PadicNumber":
        _check_odd_prime(p)
        return cls(p, None, 0, 0, _checked=True)

    @classmethod
    def zero_to(cls, p: int, abs_prec: int) -> "PadicNumber":
        """The inexact zero O(p^abs_prec)."""
        _check_odd_prime(p)
        return cls(p, abs_prec, 0, 0, _checked=True)

    @classmethod
    def from_int_abs(cls, value: int, p: int, abs_prec: int) -> "PadicNumber":
        """value + O(p^abs_prec) for an integer value."""
        _check_odd_prime(p)
        r = value % (p**abs_prec)
        if r == 0:
            return cls(p, abs_prec, 0, 0, _checked=True)
        v = ord_int(r, p)
        if v >= abs_prec:
            return cls(p, abs_prec, 0, 0, _checked=True)
        return cls(p, v, r // p**v, abs_prec - v, _checked=True)

    # -- classification ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def is_exact_zero(self) -> bool:
        return self.unit == 0 and self.v is None

    @property
    def abs_prec(self):
        """Absolute precision exponent; None means exact (infinite)."""
        if self.is_exact_zero:
            return None
        if self.unit == 0:
            return self.v
        return self.v + self.n

    @property
    def valuation(self):
        """p-adic valuation; math.inf for exact zero."""
        if self.is_exact_zero:
            return math.inf
        if self.unit == 0:
            raise ValueError(f"valuation undefined: value is O({self.p}^{self.v})")
        return self.v

    def vanishes_to(self, abs_prec: int) -> bool:
        """True when the value is indistinguishable from 0 in O(p^abs_prec).

        Requires enough stored precision to decide; raises otherwise.
        """
        if self.is_exact_zero:
            return True
        if self.unit == 0:
            if self.v >= abs_prec:
                return True
            raise ValueError(
                f"cannot decide vanishing at O({self.p}^{abs_prec}): "
                f"only known to O({self.p}^{self.v})"
            )
        return self.v >= abs_prec

    # -- precision plumbing -------------------------------------------------

    def at_abs_prec(self, abs_prec: int) -> "PadicNumber":
        """Truncate to absolute precision O(p^abs_prec)."""
        own = self.abs_prec
        if own is not None and own <= abs_prec:
            return self
        if self.unit == 0:
            return PadicNumber.zero_to(self.p, abs_prec)
        if self.v >= abs_prec:
            return PadicNumber.zero_to(self.p, abs_prec)
        n = abs_prec - self.v
        return PadicNumber(self.p, self.v, self.unit % self.p**n, n, _checked=True)

    def unit_part(self) -> "PadicNumber":
        if self.unit == 0:
            raise ValueError("unit part of zero")
        return PadicNumber(self.p, 0, self.unit, self.n, _checked=True)

    def shift(self, k: int) -> "PadicNumber":
        """Multiply by p^k."""
        if self.is_exact_zero:
            return self
        if self.unit == 0:
            return PadicNumber.zero_to(self.p, self.v + k)
        return PadicNumber(self.p, self.v + k, self.unit, self.n, _checked=True)

    def representative(self, abs_prec: int | None = None) -> int:
        """Smallest nonnegative integer congruent to the value mod p^A.

        Only meaningful for v >= 0 (p-adic integers); zeros give 0.
        """
        if self.unit == 0:
            return 0
        if self.v < 0:
            raise ValueError("representative requires a p-adic integer")
        A = self.abs_prec if abs_prec is None else min(abs_prec, self.abs_prec)
        return (self.unit * self.p**self.v) % self.p**A

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise ValueError("mixed primes")
            return other
        if isinstance(other, (int, Fraction)):
            ap = self.abs_prec
            N = self.n if self.unit != 0 else (ap if ap is not None else 20)
            return padic_from_rational(Fraction(other), self.p, max(N, 1))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.is_exact_zero:
            return b
        if b.is_exact_zero:
            return a
        if a.unit == 0 or b.unit == 0:
            if a.unit == 0 and b.unit == 0:
                return PadicNumber.zero_to(a.p, min(a.v, b.v))
            z, x = (a, b) if a.unit == 0 else (b, a)
            return x.at_abs_prec(min(z.v, x.abs_prec))
        A = min(a.abs_prec, b.abs_prec)
        vmin = min(a.v, b.v)
        if vmin >= A:
            return PadicNumber.zero_to(a.p, A)
        mod = a.p ** (A - vmin)
        r = (a.unit * a.p ** (a.v - vmin) + b.unit * b.p ** (b.v - vmin)) % mod
        return PadicNumber.from_int_abs(r, a.p, A - vmin).shift(vmin)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicNumber(self.p, self.v, -self.unit % self.p**self.n, self.n,
                           _checked=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.is_exact_zero or b.is_exact_zero:
            return PadicNumber.exact_zero(a.p)
        if a.unit == 0 or b.unit == 0:
            if a.unit == 0 and b.unit == 0:
                return PadicNumber.zero_to(a.p, a.v + b.v)
            z, x = (a, b) if a.unit == 0 else (b, a)
            return PadicNumber.zero_to(a.p, z.v + x.v)
        n = min(a.n, b.n)
        return PadicNumber(a.p, a.v + b.v, (a.unit * b.unit) % a.p**n, n,
                           _checked=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.unit == 0:
            raise ZeroDivisionError("division by (possible) p-adic zero")
        if self.is_exact_zero:
            return self
        if self.unit == 0:
            return PadicNumber.zero_to(self.p, self.v - other.v)
        n = min(self.n, other.n)
        mod = self.p**n
        u = (self.unit * pow(other.unit, -1, mod)) % mod
        return PadicNumber(self.p, self.v - other.v, u, n, _checked=True)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self._coerce(1) / self) ** (-k)
        result = self._coerce(1) if self.unit == 0 else \
            PadicNumber(self.p, 0, 1, self.n, _checked=True)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        """Representational equality (same stored digits and precision)."""
        if not isinstance(other, PadicNumber):
            return NotImplemented
        return (self.p, self.v, self.unit, self.n) == \
            (other.p, other.v, other.unit, other.n)

    def __hash__(self):
        return hash((self.p, self.v, self.unit, self.n))

    def same(self, other, abs_prec: int | None = None) -> bool:
        """Equality at the common (or given) absolute precision."""
        other = self._coerce(other)
        d = self - other
        if d.is_exact_zero:
            return True
        A = d.abs_prec if abs_prec is None else min(abs_prec, d.abs_prec)
        return d.vanishes_to(A)

    # -- rendering -----------------------------------------------------------

    def balanced_unit(self) -> int:
        """Unit representative in (-p^n/2, p^n/2]."""
        m = self.p**self.n
        return self.unit - m if self.unit > m // 2 else self.unit

    def __str__(self):
        if self.is_exact_zero:
            return "0"
        if self.unit == 0:
            return f"0 + O({self.p}^{self.v})"
        u = self.balanced_unit()
        A = self.v + self.n
        if self.v == 0:
            return f"{u} + O({self.p}^{A})"
        return f"{u} * {self.p}^{self.v} + O({self.p}^{A})"

    def __repr__(self):
        return f"PadicNumber({self})"


def padic_from_rational(q, p: int, N: int) -> PadicNumber:
    """q as an element of Q_p with N significant digits, O(p^(v+N))."""
    _check_odd_prime(p)
    q = Fraction(q)
    if q == 0:
        return PadicNumber.exact_zero(p)
    if N < 1:
        raise ValueError("precision must be >= 1")
    vn = ord_int(q.numerator, p)
    vd = ord_int(q.denominator, p)
    v = vn - vd
    mod = p**N
    num = q.numerator // p**vn
    den = q.denominator // p**vd
    unit = num * pow(den, -1, mod) % mod
    return PadicNumber(p, v, unit, N, _checked=True)


def padic_from_rational_abs(q, p: int, abs_prec: int) -> PadicNumber:
    """q as an element of Q_p known to absolute precision O(p^abs_prec)."""
    q = Fraction(q)
    if q == 0:
        return PadicNumber.zero_to(p, abs_prec)
    v = ord_int(q.numerator, p) - ord_int(q.denominator, p)
    if v >= abs_prec:
        return PadicNumber.zero_to(p, abs_prec)
    return padic_from_rational(q, p, abs_prec - v)


# -- Teichmuller / star / log / exp ------------------------------------------


def _teichmuller_int(u: int, p: int, prec: int) -> int:
    """The (p-1)st root of unity congruent to u mod p, as an int mod p^prec."""
    mod = p**prec
    t = u % mod
    while True:
        t2 = pow(t, p, mod)
        if t2 == t:
            return t
        t = t2


def teichmuller(z: PadicNumber) -> PadicNumber:
    """omega(z): iterate z -> z^p until stable mod p^n."""
    if z.is_zero or z.v != 0:
        raise ValueError("Teichmuller character needs a p-adic unit")
    t = _teichmuller_int(z.unit, z.p, z.n)
    return PadicNumber(z.p, 0, t, z.n, _checked=True)


def star(z: PadicNumber) -> PadicNumber:
    """Principal-unit part z^* = z * omega(z p^-v)^-1 * p^-v, in 1 + pZ_p."""
    if z.is_zero:
        raise ValueError("star of zero")
    u = z.unit_part()
    return u / teichmuller(u)


def _log_principal_int(s: int, p: int, M: int) -> int:
    """log of a principal unit s = 1 mod p, as an int mod p^M.

    Truncation: K terms with K - floor(log_p K) >= M, each dropped term
    having valuation >= K - log_p K.
    """
    K = max(M, 1)
    while K - _ilog(p, K) < M:
        K += 1
    extra = _ilog(p, K) + 1
    big = p ** (M + extra)
    t = (1 - s) % big
    acc = 0
    pw = t
    for k in range(1, K + 1):
        sk = ord_int(k, p) if k % p == 0 else 0
        kq = k // p**sk
        term = (pw // p**sk) * pow(kq, -1, big) % big
        acc = (acc - term) % big
        pw = pw * t % big
    return acc % (p**M)


def log_iwasawa(z: PadicNumber, prec: int | None = None) -> PadicNumber:
    """Iwasawa's p-adic logarithm: log p = 0, roots of unity -> 0.

    log z = -sum_{k>=1} (1 - z^*)^k / k.
    """
    s = star(z)
    M = s.n if prec is None else min(prec, s.n)
    acc = _log_principal_int(s.unit % s.p**M, s.p, M)
    return PadicNumber.from_int_abs(acc, s.p, M)


def _exp_int(zint: int, vz: int, p: int, M: int) -> int:
    """exp of z = zint known mod p^M with valuation vz >= 1, as int mod p^M."""
    # term z^k/k! has valuation > k*(vz - 1/(p-1)); stop once that clears M
    kmax = (M * (p - 1)) // ((p - 1) * vz - 1) + 2
    fv = sum(ord_int(k, p) for k in range(p, kmax + 1, p))
    extra = fv + 2
    big = p ** (M + extra)
    z = zint % big
    acc = 1
    pw = 1
    fact_v = 0
    fact_u = 1
    for k in range(1, kmax + 1):
        pw = pw * z % big
        sk = ord_int(k, p) if k % p == 0 else 0
        fact_v += sk
        fact_u = fact_u * (k // p**sk) % big
        term = (pw // p**fact_v) * pow(fact_u, -1, big) % big
        acc = (acc + term) % big
    return acc % (p**M)


def exp_small(z: PadicNumber, prec: int | None = None) -> PadicNumber:
    """exp z = sum z^k / k! for v(z) >= 1 (odd p); lands in 1 + pZ_p."""
    if z.is_exact_zero:
        M = prec if prec is not None else 20
        return padic_from_rational(1, z.p, M)
    if z.unit == 0:
        M = z.v if prec is None else min(prec, z.v)
        return padic_from_rational(1, z.p, M)
    if z.v < 1:
        raise ValueError("exp series needs valuation >= 1; use exp_extended")
    M = z.abs_prec if prec is None else min(prec, z.abs_prec)
    acc = _exp_int(z.representative(M), z.v, z.p, M)
    return PadicNumber.from_int_abs(acc, z.p, M)


# -- classes modulo roots of unity -------------------------------------------


@dataclass(frozen=True)
class UnitModRoots:
    """Class of a nonzero p-adic algebraic number modulo mu_infinity.

    Stored as (valuation, Iwasawa log of the unit part). The group law is
    componentwise addition, which corresponds to multiplying underlying
    numbers; equality of classes is equality of both components.
    """

    valuation: Fraction
    log: PadicNumber

    def __post_init__(self):
        object.__setattr__(self, "valuation", Fraction(self.valuation))

    @property
    def p(self) -> int:
        return self.log.p

    @classmethod
    def zero(cls, p: int, abs_prec: int | None = None) -> "UnitModRoots":
        z = PadicNumber.exact_zero(p) if abs_prec is None else \
            PadicNumber.zero_to(p, abs_prec)
        return cls(Fraction(0), z)

    @classmethod
    def of(cls, z: PadicNumber) -> "UnitModRoots":
        """The class (ord_p z, log_p z) of a concrete nonzero value."""
        return cls(Fraction(z.valuation), log_iwasawa(z))

    @classmethod
    def of_rational(cls, q, p: int, N: int) -> "UnitModRoots":
        qp = padic_from_rational(q, p, N)
        return cls.of(qp)

    def __add__(self, other: "UnitModRoots") -> "UnitModRoots":
        return UnitModRoots(self.valuation + other.valuation,
                            self.log + other.log)

    def __sub__(self, other: "UnitModRoots") -> "UnitModRoots":
        return UnitModRoots(self.valuation - other.valuation,
                            self.log - other.log)

    def __neg__(self) -> "UnitModRoots":
        return UnitModRoots(-self.valuation, -self.log)

    def scaled(self, k: int) -> "UnitModRoots":
        return UnitModRoots(k * self.valuation, k * self.log)

    def matches(self, other: "UnitModRoots", abs_prec: int | None = None) -> bool:
        """Equality mod mu_infinity at the common log precision."""
        if self.valuation != other.valuation:
            return False
        return self.log.same(other.log, abs_prec)

    def __str__(self):
        return f"(val={self.valuation}, log={self.log})"


def exp_extended(z: PadicNumber) -> UnitModRoots:
    """Class of exp_p(z) mod mu_infinity: valuation 0, log forced to be z."""
    return UnitModRoots(Fraction(0), z)
