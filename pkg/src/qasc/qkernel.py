"""q-shifted factorials, q-binomial coefficients, truncated basic
hypergeometric series, and the Euler product expansions.

Conventions:

    (a;q)_0 = 1,   (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})

    [n;k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})

    rPhis(a_1..a_r; b_1..b_s; q, z)
        = sum_n [(-1)^n q^C(n,2)]^(1+s-r)
                * (a_1..a_r;q)_n / ((b_1..b_s;q)_n (q;q)_n) * z^n

A denominator parameter equal to 0 is allowed, with (0;q)_n = 1; a
denominator parameter of the form q^(-j) makes a term blow up and raises
PoleError naming the offending term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import ONE, Poly, TSeries, as_fraction


class PoleError(ArithmeticError):
    """A q-shifted factorial in a denominator vanished."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def qpoch(a, q, n: int) -> Fraction:
    """q-shifted factorial (a;q)_n for exact rational a, q."""
    a = as_fraction(a)
    q = as_fraction(q)
    if n < 0:
        raise ValueError("qpoch needs n >= 0")
    out = ONE
    p = ONE
    for _ in range(n):
        out *= 1 - a * p
        p *= q
    return out


def qpoch_multi(params: Sequence, q, n: int) -> Fraction:
    """Product (a_1, ..., a_m; q)_n over a parameter list."""
    out = ONE
    for a in params:
        out *= qpoch(a, q, n)
    return out


def qbinom(n: int, k: int, q) -> Fraction:
    """Gaussian binomial coefficient [n;k]_q; 0 when k is out of range."""
    if k < 0 or k > n:
        return Fraction(0)
    q = as_fraction(q)
    # (q^{n-k+1};q)_k / (q;q)_k, computed as a ratio of short products
    num = ONE
    den = ONE
    p = q ** (n - k)
    r = ONE
    for _ in range(k):
        p *= q
        r *= q
        num *= 1 - p
        den *= 1 - r
    return num / den


def binom2(n: int) -> int:
    """C(n, 2) = n(n-1)/2."""
    return n * (n - 1) // 2


class PhiSpec:
    """Parameter block for a basic hypergeometric series rPhis.

    The correction factor [(-1)^n q^C(n,2)] is raised to 1+s-r, which must
    be >= 0 for every series used here.  Denominator parameters may be 0.
    """

    def __init__(self, numerators: Sequence, denominators: Sequence, q):
        self.numerators = [as_fraction(v) for v in numerators]
        self.denominators = [as_fraction(v) for v in denominators]
        self.q = as_fraction(q)
        self.sign_exponent = 1 + len(self.denominators) - len(self.numerators)
        if self.sign_exponent < 0:
            raise ValueError("series with r > s+1 are not supported")


def hyper_series(spec: PhiSpec, order: int, arg_mono: Poly | Fraction | int = 1) -> TSeries:
    """Truncated rPhis with argument z = arg_mono * t.

    arg_mono must be a monomial (a scalar, or scalar * x^i y^j); term n then
    lands exactly in t^n with Poly coefficient arg_mono^n times the scalar
    term of the series.  Terms are built by the n -> n+1 ratio recurrence.
    """
    if isinstance(arg_mono, (int, Fraction)):
        arg_mono = Poly.const(arg_mono)
    if not arg_mono.is_monomial():
        raise ValueError("hyper_series argument must be a monomial times t")
    q = spec.q
    coeffs = [Poly.zero()] * (order + 1)
    coeffs[0] = Poly.one()
    term = ONE  # scalar part of term n
    qn = ONE    # q^n
    mono_pow = Poly.one()
    for n in range(order):
        ratio = ONE
        for a in spec.numerators:
            ratio *= 1 - a * qn
        for b in spec.denominators:
            f = 1 - b * qn
            if f == 0:
                raise PoleError(
                    f"denominator parameter {b} hits a pole at term {n + 1}",
                    index=n + 1,
                )
            ratio /= f
        ratio /= 1 - q * qn
        if spec.sign_exponent:
            ratio *= (-qn) ** spec.sign_exponent
        term *= ratio
        qn *= q
        mono_pow = mono_pow * arg_mono
        if term:
            coeffs[n + 1] = mono_pow * term
    return TSeries(order, coeffs)


def euler_inverse_series(mono: Poly | Fraction | int, q, order: int, t_power: int = 1) -> TSeries:
    """Series for 1/(mono*t^t_power; q)_inf = sum_n mono^n t^(n*t_power) / (q;q)_n."""
    if isinstance(mono, (int, Fraction)):
        mono = Poly.const(mono)
    if not mono.is_monomial():
        raise ValueError("euler expansions take a monomial argument")
    q = as_fraction(q)
    coeffs = [Poly.zero()] * (order + 1)
    coeffs[0] = Poly.one()
    scalar = ONE
    qn = ONE
    mono_pow = Poly.one()
    n = 1
    while n * t_power <= order:
        qn *= q
        scalar /= 1 - qn
        mono_pow = mono_pow * mono
        coeffs[n * t_power] = mono_pow * scalar
        n += 1
    return TSeries(order, coeffs)


def euler_product_series(mono: Poly | Fraction | int, q, order: int, t_power: int = 1) -> TSeries:
    """Series for (mono*t^t_power; q)_inf
    = sum_n (-1)^n q^C(n,2) mono^n t^(n*t_power) / (q;q)_n."""
    if isinstance(mono, (int, Fraction)):
        mono = Poly.const(mono)
    if not mono.is_monomial():
        raise ValueError("euler expansions take a monomial argument")
    q = as_fraction(q)
    coeffs = [Poly.zero()] * (order + 1)
    coeffs[0] = Poly.one()
    scalar = ONE
    qn = ONE
    qbin = ONE  # q^C(n,2)
    mono_pow = Poly.one()
    n = 1
    while n * t_power <= order:
        qn *= q
        scalar /= 1 - qn
        if n > 1:
            qbin *= qn / q  # q^C(n,2) = q^C(n-1,2) * q^(n-1)
        sign = -ONE if n % 2 else ONE
        mono_pow = mono_pow * mono
        coeffs[n * t_power] = mono_pow * (sign * qbin * scalar)
        n += 1
    return TSeries(order, coeffs)


def qpoch_t_poly(mono: Poly | Fraction | int, q, j: int, order: int) -> TSeries:
    """The finite product (mono*t; q)_j = prod_{i<j} (1 - mono q^i t) as a TSeries."""
    if isinstance(mono, (int, Fraction)):
        mono = Poly.const(mono)
    q = as_fraction(q)
    out = TSeries.one(order)
    qi = ONE
    for _ in range(j):
        factor = TSeries.one(order)
        if order >= 1:
            factor.coeffs[1] = mono * (-qi)
        out = out * factor
        qi *= q
    return out
