"""Exact arithmetic in cyclotomic fields, plus truncated power series.

Elements of Q(zeta_n) are dense coefficient vectors of length phi(n) in the
basis 1, zeta, ..., zeta^(phi(n)-1), reduced mod the n-th cyclotomic
polynomial.  Mixed-order arithmetic promotes both operands to Q(zeta_lcm).
Sign decisions for real elements use certified rational interval enclosures
(Taylor series with Lagrange remainders); equality and zero tests are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# integer polynomials, ascending coefficients


def _poly_trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    """Exact division in Q[x]; b nonzero."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = Fraction(1) / Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = Fraction(a[i + len(b) - 1]) * inv_lead
        if c == 0:
            continue
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * Fraction(y)
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending, all integers."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
            assert not rem
    assert all(Fraction(c).denominator == 1 for c in num)
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> list[Fraction]:
    """Reduce a polynomial in zeta_n (ascending coeffs) to the phi(n) basis."""
    phi = totient(n)
    c = [Fraction(x) for x in coeffs]
    # zeta^n = 1 first, keeps degrees small
    if len(c) > n:
        folded = [Fraction(0)] * n
        for k, x in enumerate(c):
            folded[k % n] += x
        c = folded
    _poly_trim(c)
    if len(c) > phi:
        _, c = _poly_divmod(c, list(cyclotomic_poly(n)))
    c += [Fraction(0)] * (phi - len(c))
    return c[:phi]


class Cyclotomic:
    """An element of Q(zeta_n), exact."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs: list, reduce: bool = True):
        self.n = n
        self.c = tuple(_reduce_mod_phi(list(coeffs), n)) if reduce \
            else tuple(Fraction(x) for x in coeffs)

    # -- constructors

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        """zeta_n^k, the primitive n-th root of unity to the k-th power."""
        k %= n
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return Cyclotomic(n, coeffs)

    @staticmethod
    def rational(q) -> "Cyclotomic":
        return Cyclotomic(1, [Fraction(q)], reduce=False)

    @staticmethod
    def root_of_unity(q) -> "Cyclotomic":
        """e^(2 pi i q) for rational q."""
        q = Fraction(q)
        return Cyclotomic.zeta(q.denominator, q.numerator % q.denominator)

    # -- order promotion

    def promote(self, m: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        assert m % self.n == 0
        step = m // self.n
        coeffs = [Fraction(0)] * (step * (len(self.c) - 1) + 1 if self.c else 1)
        for k, x in enumerate(self.c):
            coeffs[k * step] += x
        return Cyclotomic(m, coeffs)

    def _match(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        m = self.n * other.n // math.gcd(self.n, other.n)
        return self.promote(m), other.promote(m)

    @staticmethod
    def _coerce(x) -> "Cyclotomic | None":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return None

    # -- arithmetic

    def __add__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        return Cyclotomic(a.n, [x + y for x, y in zip(a.c, b.c)], reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-x for x in self.c], reduce=False)

    def __sub__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        if o.n == 1:  # scalar fast path
            s = o.c[0] if o.c else Fraction(0)
            return Cyclotomic(self.n, [x * s for x in self.c], reduce=False)
        if self.n == 1:
            s = self.c[0] if self.c else Fraction(0)
            return Cyclotomic(o.n, [x * s for x in o.c], reduce=False)
        a, b = self._match(o)
        prod = _poly_mul(list(a.c), list(b.c))
        return Cyclotomic(a.n, prod)

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        """Multiplicative inverse via extended Euclid against the cyclotomic polynomial."""
        assert not self.is_zero(), "division by zero"
        phi = list(cyclotomic_poly(self.n))
        # extended gcd of self.c and phi in Q[x]
        r0, r1 = [Fraction(x) for x in phi], _poly_trim([Fraction(x) for x in self.c])
        s0, s1 = [], [Fraction(1)]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = _poly_sub(s0, _poly_mul_f(q, s1))
            r0, s0, r1, s1 = r1, s1, r, s
        # r1 is the gcd, a nonzero constant (cyclotomic polys are irreducible)
        assert len(r1) == 1
        g = r1[0]
        return Cyclotomic(self.n, [x / g for x in s1])

    def __truediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, zeta |-> zeta^(-1)."""
        coeffs = [Fraction(0)] * self.n
        for k, x in enumerate(self.c):
            coeffs[(-k) % self.n] += x
        return Cyclotomic(self.n, coeffs)

    # -- predicates

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def to_rational(self) -> Fraction | None:
        """The element as a Fraction if it lies in Q, else None."""
        if all(x == 0 for x in self.c[1:]):
            return self.c[0] if self.c else Fraction(0)
        return None

    def is_rational(self) -> bool:
        return self.to_rational() is not None

    def is_real(self) -> bool:
        return (self - self.conj()).is_zero()

    def __eq__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        return a.c == b.c

    def __hash__(self):
        q = self.to_rational()
        if q is not None:
            return hash(q)
        m = self.n
        # hash via coefficients at the conductor-free order; promotion-stable
        # only for equal orders, so fall back to a coarse class hash
        return hash(("cyc", m, self.c))

    def __repr__(self):
        q = self.to_rational()
        if q is not None:
            return f"Cyc({q})"
        terms = [f"{x}*z{self.n}^{k}" for k, x in enumerate(self.c) if x != 0]
        return "Cyc(" + " + ".join(terms) + ")"

    # -- certified sign for real elements

    def sign_real(self) -> int:
        """Sign (-1, 0, 1) of a real element; exact, via interval enclosures."""
        assert self.is_real(), "sign_real needs a real element"
        q = self.to_rational()
        if q is not None:
            return (q > 0) - (q < 0)
        if self.is_zero():
            return 0
        # value = sum_k c_k * cos(2 pi k / n), nonzero; tighten until decided
        terms = 24
        for _ in range(12):
            lo, hi = Fraction(0), Fraction(0)
            for k, x in enumerate(self.c):
                if x == 0:
                    continue
                clo, chi = _cos2pi_bounds(Fraction(k, self.n), terms)
                if x > 0:
                    lo += x * clo
                    hi += x * chi
                else:
                    lo += x * chi
                    hi += x * clo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            terms *= 2
        raise ArithmeticError("sign enclosure failed to converge")


def _poly_sub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _poly_trim(out)


def _poly_mul_f(a: list, b: list) -> list:
    return [Fraction(x) for x in _poly_mul(a, b)]


@lru_cache(maxsize=None)
def _pi_bounds(terms: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of pi via Machin's formula with alternating tails."""
    def arctan_inv(m: int) -> tuple[Fraction, Fraction]:
        s = Fraction(0)
        sign = 1
        for j in range(terms):
            s += Fraction(sign, (2 * j + 1) * m ** (2 * j + 1))
            sign = -sign
        tail = Fraction(1, (2 * terms + 1) * m ** (2 * terms + 1))
        return (s - tail, s + tail) if sign > 0 else (s, s + tail)

    a5lo, a5hi = arctan_inv(5)
    a239lo, a239hi = arctan_inv(239)
    return 16 * a5lo - 4 * a239hi, 16 * a5hi - 4 * a239lo


@lru_cache(maxsize=None)
def _cos2pi_bounds(q: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure of cos(2 pi q) via Taylor series at 0."""
    q = Fraction(q.numerator % q.denominator, q.denominator)
    pi_lo, pi_hi = _pi_bounds(max(8, terms // 2))
    # t in [2 pi_lo q, 2 pi_hi q], 0 <= t < 2 pi_hi
    t_lo, t_hi = 2 * pi_lo * q, 2 * pi_hi * q
    lo, hi = Fraction(0), Fraction(0)
    fact = 1
    for j in range(terms):
        if j > 0:
            fact *= (2 * j - 1) * (2 * j)
        p_lo, p_hi = t_lo ** (2 * j), t_hi ** (2 * j)
        if j % 2 == 0:
            lo += p_lo / fact
            hi += p_hi / fact
        else:
            lo -= p_hi / fact
            hi -= p_lo / fact
    rem_fact = fact * (2 * terms - 1) * (2 * terms) if terms > 0 else 1
    rem = t_hi ** (2 * terms) / rem_fact
    return lo - rem, min(hi + rem, Fraction(1))


# ---------------------------------------------------------------------------
# univariate truncated series with exponents in (1/p)Z


class QSeries:
    """Truncated series sum_e c_e q^e with rational exponents.

    Terms with exponent >= cutoff are dropped.  Coefficients may be int,
    Fraction, or Cyclotomic.
    """

    __slots__ = ("coeffs", "cutoff")

    def __init__(self, coeffs: dict, cutoff):
        self.cutoff = Fraction(cutoff)
        self.coeffs = {Fraction(e): c for e, c in coeffs.items()
                       if Fraction(e) < self.cutoff and not _cc_is_zero(c)}

    @staticmethod
    def one(cutoff) -> "QSeries":
        return QSeries({Fraction(0): 1}, cutoff)

    def __add__(self, other: "QSeries") -> "QSeries":
        cut = min(self.cutoff, other.cutoff)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(out, cut)

    def __mul__(self, other: "QSeries") -> "QSeries":
        cut = min(self.cutoff, other.cutoff)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e < cut:
                    out[e] = out.get(e, 0) + c1 * c2
        return QSeries(out, cut)

    def scale(self, c) -> "QSeries":
        return QSeries({e: c * x for e, x in self.coeffs.items()}, self.cutoff)

    def shift(self, delta) -> "QSeries":
        return QSeries({e + Fraction(delta): c for e, c in self.coeffs.items()},
                       self.cutoff)

    def coeff(self, e):
        return self.coeffs.get(Fraction(e), 0)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        cut = min(self.cutoff, other.cutoff)
        keys = {e for e in self.coeffs if e < cut} | {e for e in other.coeffs if e < cut}
        return all(_cc_eq(self.coeffs.get(e, 0), other.coeffs.get(e, 0)) for e in keys)

    def __repr__(self):
        items = sorted(self.coeffs.items())
        return "QSeries(" + " + ".join(f"{c}*q^{e}" for e, c in items[:8]) \
            + (" + ..." if len(items) > 8 else "") + f"; cutoff={self.cutoff})"


def _cc_is_zero(c) -> bool:
    if isinstance(c, Cyclotomic):
        return c.is_zero()
    return c == 0


def _cc_eq(a, b) -> bool:
    if isinstance(a, Cyclotomic) or isinstance(b, Cyclotomic):
        d = a - b if isinstance(a, Cyclotomic) else b - a
        return d.is_zero()
    return a == b


# ---------------------------------------------------------------------------
# bivariate truncated series over Q(zeta), total degree <= maxdeg


class BiSeries:
    """Truncated series sum c_{mn} x^m y^n, keeping total degree m+n <= maxdeg."""

    __slots__ = ("coeffs", "maxdeg")

    def __init__(self, coeffs: dict, maxdeg: int):
        self.maxdeg = maxdeg
        self.coeffs = {mn: c for mn, c in coeffs.items()
                       if mn[0] + mn[1] <= maxdeg and not _cc_is_zero(c)}

    @staticmethod
    def constant(c, maxdeg: int) -> "BiSeries":
        return BiSeries({(0, 0): c}, maxdeg)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        deg = min(self.maxdeg, other.maxdeg)
        out = dict(self.coeffs)
        for mn, c in other.coeffs.items():
            out[mn] = out.get(mn, 0) + c
        return BiSeries(out, deg)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        deg = min(self.maxdeg, other.maxdeg)
        out = dict(self.coeffs)
        for mn, c in other.coeffs.items():
            out[mn] = out.get(mn, 0) - c
        return BiSeries(out, deg)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        deg = min(self.maxdeg, other.maxdeg)
        out: dict = {}
        for (m1, n1), c1 in self.coeffs.items():
            for (m2, n2), c2 in other.coeffs.items():
                m, n = m1 + m2, n1 + n2
                if m + n <= deg:
                    key = (m, n)
                    out[key] = out.get(key, 0) + c1 * c2
        return BiSeries(out, deg)

    def scale(self, c) -> "BiSeries":
        return BiSeries({mn: c * x for mn, x in self.coeffs.items()}, self.maxdeg)

    def coeff(self, m: int, n: int):
        return self.coeffs.get((m, n), 0)


def binomial_frac(a: Fraction, m: int) -> Fraction:
    """Generalized binomial coefficient C(a, m) for rational a."""
    num = Fraction(1)
    for j in range(m):
        num *= (a - j)
    return num / math.factorial(m)


def one_plus_x_pow(exponent: Fraction, var: int, maxdeg: int) -> BiSeries:
    """(1 + x)^exponent (var=0) or (1 + y)^exponent (var=1) as a BiSeries."""
    coeffs = {}
    for m in range(maxdeg + 1):
        key = (m, 0) if var == 0 else (0, m)
        coeffs[key] = binomial_frac(Fraction(exponent), m)
    return BiSeries(coeffs, maxdeg)


def log_series(a: BiSeries) -> BiSeries:
    """log of a series with constant term 1: sum (-1)^(k+1) (a-1)^k / k."""
    one = BiSeries.constant(1, a.maxdeg)
    u = a - one
    out = BiSeries({}, a.maxdeg)
    power = BiSeries.constant(1, a.maxdeg)
    for k in range(1, a.maxdeg + 1):
        power = power * u
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    return out


def series_log_expand(p: int, maxdeg: int) -> list[BiSeries]:
    """Normal-ordering correction coefficients for an order-p twist.

    Returns [c^0, ..., c^(p-1)] where for i != 0

        c^i = (1/2) log( ((1+x)^(1/p) - w^(-i) (1+y)^(1/p)) / (1 - w^(-i)) )

    with w = e^(2 pi i / p), expanded as a bivariate series to total degree
    maxdeg, and c^0 = -sum_{i != 0} c^i.  All coefficients are exact elements
    of Q(w); the constant coefficient of every c^i vanishes.
    """
    fx = one_plus_x_pow(Fraction(1, p), 0, maxdeg)
    fy = one_plus_x_pow(Fraction(1, p), 1, maxdeg)
    out: list[BiSeries] = []
    total = BiSeries({}, maxdeg)
    for i in range(1, p):
        w = Cyclotomic.zeta(p, -i)
        scale = (1 - w).inv()
        a = (fx - fy.scale(w)).scale(scale)
        ci = log_series(a).scale(Fraction(1, 2))
        out.append(ci)
        total = total + ci
    out.insert(0, BiSeries({}, maxdeg) - total)
    return out
