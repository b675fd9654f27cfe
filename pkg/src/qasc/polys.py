"""Polynomial families: Cauchy products, Rogers-Szego polynomials, and the
Al-Salam-Carlitz families (classical one-parameter, three-parameter, and
the five-parameter pair tied to the T/E operator series).

All functions accept exact rationals or Poly values for the variable slots
and return whichever the inputs produce; with the default symbolic x, y the
result is a Poly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ONE, ParamSet, Poly, X, Y, as_fraction
from .qkernel import PoleError, qbinom, qpoch, qpoch_multi


def _val(v):
    return v if isinstance(v, Poly) else Poly.const(as_fraction(v))


def cauchy_pn(n: int, x=X, y=Y, q=Fraction(1, 2)):
    """Cauchy polynomial p_n(x,y) = (x - y)(x - qy) ... (x - q^(n-1) y)."""
    q = as_fraction(q)
    out = Poly.one()
    xv = _val(x)
    yv = _val(y)
    qi = ONE
    for _ in range(n):
        out = out * (xv - yv * qi)
        qi *= q
    return out


def rogers_szego_hn(n: int, a, b, q):
    """Homogeneous Rogers-Szego polynomial h_n(a,b|q) = sum_k [n;k] a^k b^(n-k)."""
    q = as_fraction(q)
    av = _val(a)
    bv = _val(b)
    out = Poly.zero()
    for k in range(n + 1):
        out = out + av**k * bv ** (n - k) * qbinom(n, k, q)
    return out


def asc_phi(n: int, a, x, q):
    """Classical family phi_n^(a)(x|q) = sum_k [n;k] (a;q)_k x^k."""
    q = as_fraction(q)
    a = as_fraction(a)
    xv = _val(x)
    out = Poly.zero()
    for k in range(n + 1):
        out = out + xv**k * (qbinom(n, k, q) * qpoch(a, q, k))
    return out


def asc_psi(n: int, a, x, q):
    """Classical companion psi_n^(a)(x|q)
    = sum_k [n;k] q^(k(k-n)) (a q^(1-k);q)_k x^k."""
    q = as_fraction(q)
    a = as_fraction(a)
    xv = _val(x)
    out = Poly.zero()
    for k in range(n + 1):
        w = qbinom(n, k, q) * q ** (k * (k - n)) * qpoch(a * q ** (1 - k), q, k)
        out = out + xv**k * w
    return out


def _gen3_weight(k: int, a, b, c, q) -> Fraction:
    den = qpoch(c, q, k)
    if den == 0:
        raise PoleError(f"(c;q)_k vanished at k={k} for c={c}", index=k)
    return qpoch_multi((a, b), q, k) / den


def asc3_phi(n: int, a, b, c, x=X, y=Y, q=Fraction(1, 2)):
    """Three-parameter family
    phi_n^(a,b,c)(x,y|q) = sum_k [n;k] (a,b;q)_k/(c;q)_k x^k y^(n-k)."""
    q = as_fraction(q)
    xv = _val(x)
    yv = _val(y)
    out = Poly.zero()
    for k in range(n + 1):
        w = qbinom(n, k, q) * _gen3_weight(k, a, b, c, q)
        out = out + xv**k * yv ** (n - k) * w
    return out


def asc3_psi(n: int, a, b, c, x=X, y=Y, q=Fraction(1, 2)):
    """Three-parameter companion with weight (-1)^k q^(C(k+1,2) - nk)."""
    q = as_fraction(q)
    xv = _val(x)
    yv = _val(y)
    out = Poly.zero()
    for k in range(n + 1):
        w = (
            qbinom(n, k, q)
            * (-1) ** k
            * q ** (k * (k + 1) // 2 - n * k)
            * _gen3_weight(k, a, b, c, q)
        )
        out = out + xv**k * yv ** (n - k) * w
    return out


def _asc5_weight(k: int, ps: ParamSet) -> Fraction:
    den = qpoch_multi((ps.d, ps.e), ps.q, k)
    if den == 0:
        raise PoleError(f"(d,e;q)_k vanished at k={k} for d={ps.d}, e={ps.e}", index=k)
    return qpoch_multi((ps.a, ps.b, ps.c), ps.q, k) / den


def asc5_phi(n: int, ps: ParamSet, x=X, y=Y):
    """Five-parameter family
    phi_n(x,y) = sum_k [n;k] (a,b,c;q)_k/(d,e;q)_k x^(n-k) y^k,
    equivalently T(a,b,c,d,e, y D){x^n}."""
    q = ps.q
    xv = _val(x)
    yv = _val(y)
    out = Poly.zero()
    for k in range(n + 1):
        w = qbinom(n, k, q) * _asc5_weight(k, ps)
        out = out + xv ** (n - k) * yv**k * w
    return out


def asc5_psi(n: int, ps: ParamSet, x=X, y=Y):
    """Five-parameter companion
    psi_n(x,y) = sum_k [n;k] (-1)^k q^(k(k-n)) (a,b,c;q)_k/(d,e;q)_k x^(n-k) y^k,
    equivalently E(a,b,c,d,e, y theta){x^n}."""
    q = ps.q
    xv = _val(x)
    yv = _val(y)
    out = Poly.zero()
    for k in range(n + 1):
        w = (
            qbinom(n, k, q)
            * (-1) ** k
            * q ** (k * (k - n))
            * _asc5_weight(k, ps)
        )
        out = out + xv ** (n - k) * yv**k * w
    return out


# which of a..e each family consumes; anything else must be zero
_FAMILY_ARITY = {
    "cauchy": (),
    "rogers_szego": (),
    "asc_classical_phi": ("a",),
    "asc_classical_psi": ("a",),
    "asc_gen3_phi": ("a", "b", "c"),
    "asc_gen3_psi": ("a", "b", "c"),
    "asc_new_phi": ("a", "b", "c", "d", "e"),
    "asc_new_psi": ("a", "b", "c", "d", "e"),
}


@dataclass(frozen=True)
class PolyFamily:
    """A named polynomial family bound to one parameter assignment.

    Validates that the parameters beyond the family's arity are zero, so a
    mistaken draw cannot silently evaluate the wrong family.
    """

    family: str
    params: ParamSet

    def __post_init__(self):
        if self.family not in _FAMILY_ARITY:
            raise ValueError(f"unknown family {self.family!r}")
        used = _FAMILY_ARITY[self.family]
        for name in ("a", "b", "c", "d", "e"):
            if name not in used and self.params.get(name) != 0:
                raise ValueError(
                    f"{self.family} takes parameters {used or '()'}; {name} must be 0"
                )

    def evaluate(self, n: int, x=X, y=Y):
        ps = self.params
        q = ps.q
        if self.family == "cauchy":
            return cauchy_pn(n, x, y, q)
        if self.family == "rogers_szego":
            return rogers_szego_hn(n, x, y, q)
        if self.family == "asc_classical_phi":
            return asc_phi(n, ps.a, x, q)
        if self.family == "asc_classical_psi":
            return asc_psi(n, ps.a, x, q)
        if self.family == "asc_gen3_phi":
            return asc3_phi(n, ps.a, ps.b, ps.c, x, y, q)
        if self.family == "asc_gen3_psi":
            return asc3_psi(n, ps.a, ps.b, ps.c, x, y, q)
        if self.family == "asc_new_phi":
            return asc5_phi(n, ps, x, y)
        return asc5_psi(n, ps, x, y)
