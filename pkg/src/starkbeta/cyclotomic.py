"""Exact arithmetic in Q(zeta_m): power basis mod the m-th cyclotomic
polynomial, Galois action, exact Stark units, minimal polynomials, and
the exact reciprocity check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (den monic up to sign)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        c //= lead
        q[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending, monic."""
    if m < 1:
        raise ValueError("conductor must be >= 1")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
            if any(rem[i] for i in range(len(rem))):
                raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(num)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """x^s mod Phi_m as integer coefficient rows, for s up to
    max(m, 2*phi(m)) - 1."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    count = max(m, 2 * deg)
    rows = []
    cur = [0] * deg
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(count - 1):
        nxt = [0] * (deg + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] = c
        top = nxt[deg]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt[:deg]
        rows.append(tuple(cur))
    return tuple(rows)


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_m) as a rational vector in the power basis
    1, zeta, ..., zeta^(phi(m)-1) mod Phi_m."""

    m: int
    coeffs: tuple

    def __post_init__(self):
        deg = euler_phi(self.m)
        c = tuple(Fraction(x) for x in self.coeffs)
        if len(c) != deg:
            c = c + (Fraction(0),) * (deg - len(c))
        object.__setattr__(self, "coeffs", c)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "CyclotomicNumber":
        return cls(m, (Fraction(0),) * euler_phi(m))

    @classmethod
    def from_rational(cls, m: int, q) -> "CyclotomicNumber":
        v = [Fraction(0)] * euler_phi(m)
        v[0] = Fraction(q)
        return cls(m, tuple(v))

    @classmethod
    def zeta_pow(cls, m: int, k: int) -> "CyclotomicNumber":
        return cls(m, _power_rows(m)[k % m])

    # -- ring structure -------------------------------------------------------

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.m != other.m:
            raise ValueError("mixed conductors")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self.m, other)
        self._check(other)
        return CyclotomicNumber(
            self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(
                self.m, tuple(a * other for a in self.coeffs))
        self._check(other)
        deg = len(self.coeffs)
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        rows = _power_rows(self.m)
        out = [Fraction(0)] * deg
        for s, c in enumerate(conv):
            if c:
                row = rows[s]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CyclotomicNumber(self.m, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = CyclotomicNumber.from_rational(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        """The rational value if the element is rational, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, zeta -> zeta^-1."""
        return galois_apply(self.m - 1, self)

    def eval_complex(self, digits: int = 30):
        """Numerical image under zeta_m -> exp(2 pi i / m)."""
        with mpmath.workdps(digits + 10):
            z = mpmath.e ** (2j * mpmath.pi / self.m)
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
            return acc

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            mag = abs(c)
            body = f"{mag}" if (i == 0 or mag != 1) else ""
            term = body + ("*" if body and mono else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts) if parts else "0"


def galois_apply(t: int, x: CyclotomicNumber) -> CyclotomicNumber:
    """Image of x under zeta_m -> zeta_m^t, for gcd(t, m) = 1."""
    m = x.m
    if gcd(t, m) != 1:
        raise ValueError("Galois index must be coprime to the conductor")
    rows = _power_rows(m)
    deg = len(x.coeffs)
    out = [Fraction(0)] * deg
    for i, c in enumerate(x.coeffs):
        if c:
            row = rows[(t * i) % m]
            for k in range(deg):
                if row[k]:
                    out[k] += c * row[k]
    return CyclotomicNumber(m, tuple(out))


def stark_unit_exact(a: int, m: int) -> CyclotomicNumber:
    """The exact unit 2 - zeta_m^a - zeta_m^(-a), i.e. (2 sin(a pi/m))^2."""
    if m < 3:
        raise ValueError("conductor must be >= 3")
    if not (0 < a < Fraction(m, 2)):
        raise ValueError("need 0 < a < m/2")
    if gcd(a, m) != 1:
        raise ValueError("need gcd(a, m) = 1")
    return (CyclotomicNumber.from_rational(m, 2)
            - CyclotomicNumber.zeta_pow(m, a)
            - CyclotomicNumber.zeta_pow(m, -a))


def _solve_exact(columns, target):
    """Solve sum_k c_k * columns[k] = target exactly over Q; None if
    inconsistent."""
    rows = len(target)
    ncols = len(columns)
    aug = [[columns[k][r] for k in range(ncols)] + [target[r]]
           for r in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / Fraction(aug[r][c])
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][ncols]
    return sol


def min_poly(x: CyclotomicNumber, degree_bound: int | None = None) -> tuple[int, ...]:
    """Exact minimal polynomial of x over Q, as a primitive integer
    coefficient tuple (ascending, positive leading coefficient)."""
    if x.is_zero:
        return (0, 1)
    bound = euler_phi(x.m) if degree_bound is None else degree_bound
    powers = [CyclotomicNumber.from_rational(x.m, 1)]
    for d in range(1, bound + 1):
        powers.append(powers[-1] * x)
        cols = [list(powers[k].coeffs) for k in range(d)]
        target = [-c for c in powers[d].coeffs]
        sol = _solve_exact(cols, target)
        if sol is not None:
            monic = sol + [Fraction(1)]
            den = 1
            for c in monic:
                den = den * c.denominator // gcd(den, c.denominator)
            ints = [int(c * den) for c in monic]
            content = 0
            for c in ints:
                content = gcd(content, c)
            ints = [c // content for c in ints]
            if ints[-1] < 0:
                ints = [-c for c in ints]
            return tuple(ints)
    raise ValueError(f"degree of minimal polynomial exceeds bound {bound}")


@dataclass
class RecExactReport:
    """Outcome of the exact reciprocity check tau(u(sigma)) = u(tau sigma)."""

    m: int
    t: int
    cases: list  # (a, a_image, equal)

    @property
    def all_equal(self) -> bool:
        return all(eq for (_, _, eq) in self.cases)


def normalize_rep(a: int, m: int) -> int:
    """Representative of +-a mod m inside (0, m/2)."""
    a %= m
    return min(a, m - a)


def rec_exact_check(m: int, t: int) -> RecExactReport:
    """For every sigma_(+-a/m): does zeta -> zeta^t send u(a) to u(a')
    with a' = +-t*a mod m normalized? Exact equality, no tolerance."""
    if gcd(t, m) != 1:
        raise ValueError("t must be coprime to m")
    cases = []
    for a in range(1, (m + 1) // 2):
        if gcd(a, m) != 1 or 2 * a == m:
            continue
        u = stark_unit_exact(a, m)
        image = galois_apply(t, u)
        a2 = normalize_rep(t * a, m)
        expected = stark_unit_exact(a2, m)
        cases.append((a, a2, image.coeffs == expected.coeffs))
    return RecExactReport(m, t, cases)
