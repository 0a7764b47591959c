"""Decomposition of rational primes in monogenic number fields.

The field is presented by a monic integer polynomial.  Factoring it modulo p
gives the ramification/inertia pairs (e_i, f_i) whenever p does not divide
the index of the equation order; away from the discriminant that is free, and
on it the classical index-divisibility test decides.  Primes where the test
fails are refused — callers may override with an explicit decomposition type.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import Poly, isprime
from sympy import symbols as _symbols
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_degree, gf_factor, gf_gcd

from .laurent import EulerForm, ResourceGuardError

MAX_PRIME = 10**6

_x = _symbols("x")


class UnsupportedRamifiedPrimeError(ValueError):
    """The prime divides the index of the equation order; no type is computed."""


def _check_prime(p):
    if p > MAX_PRIME:
        raise ResourceGuardError(f"primes capped at {MAX_PRIME}, got {p}")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def _ascending_to_poly(coeffs):
    # sympy's dense representation is leading-first
    return Poly(list(reversed(coeffs)), _x)


@dataclass(frozen=True)
class NumberField:
    """A number field Q[x]/(minpoly); coefficients constant term first.

    The minimal polynomial must be monic and is *assumed* irreducible; only
    cheap necessary conditions (squarefree, no integer root) are checked here,
    the rest is the caller's obligation.
    """

    minpoly: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.minpoly)
        object.__setattr__(self, "minpoly", coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        if self.degree > 1:
            c0 = coeffs[0]
            if c0 == 0:
                raise ValueError("reducible: x divides the polynomial")
            for r in _integer_root_candidates(c0):
                if _eval_int_poly(coeffs, r) == 0:
                    raise ValueError(f"reducible: integer root {r}")
            poly = _ascending_to_poly(coeffs)
            if poly.gcd(poly.diff(_x)).degree() > 0:
                raise ValueError("not squarefree")

    @property
    def degree(self):
        return len(self.minpoly) - 1


def rationals():
    """Q presented by the polynomial x."""
    return NumberField((0, 1))


def _integer_root_candidates(c0):
    n = abs(c0)
    for r in range(1, n + 1):
        if n % r == 0:
            yield r
            yield -r


def _eval_int_poly(coeffs, v):
    out = 0
    for c in reversed(coeffs):
        out = out * v + c
    return out


def discriminant(coeffs):
    """Exact discriminant of an integer polynomial (constant term first)."""
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError("polynomial must be nonconstant")
    return int(_ascending_to_poly(coeffs).discriminant())


def factor_mod_p(coeffs, p):
    """Monic irreducible factors of the polynomial over F_p, with multiplicity.

    Returns [(factor, multiplicity), ...] with each factor an ascending tuple
    of coefficients normalized to 0..p-1, sorted by degree then coefficients.
    For monic input the product of the factors reproduces f mod p; a non-monic
    leading unit is discarded.
    """
    _check_prime(p)
    desc = [c % p for c in reversed([int(c) for c in coeffs])]
    while desc and desc[0] == 0:
        desc.pop(0)
    if not desc:
        raise ValueError("polynomial vanishes identically mod p")
    _, raw = gf_factor(ZZ.map(desc), p, ZZ)
    out = []
    for fac, mult in raw:
        asc = tuple(int(c) % p for c in reversed(fac))
        out.append((asc, int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


def _dedekind_index_coprime(coeffs, p, factors):
    """True iff p does not divide [O_K : Z[x]/(f)], by the index test:
    with fbar = prod gbar_i^{e_i}, g = prod g_i, h = prod g_i^{e_i - 1}
    (monic lifts), and F = (g*h - f)/p, the test asks gcd(Fbar, gbar, hbar) = 1."""
    g_lift = [1]
    h_lift = [1]
    for fac, e in factors:
        g_lift = _zmul(g_lift, list(fac))
        for _ in range(e - 1):
            h_lift = _zmul(h_lift, list(fac))
    f = [int(c) for c in coeffs]
    prod = _zmul(g_lift, h_lift)
    diff = _zsub(prod, f)
    if any(c % p for c in diff):
        raise AssertionError("g*h - f should vanish mod p by construction")
    big_f = [c // p for c in diff]

    def to_gf(asc):
        desc = [c % p for c in reversed(asc)]
        while desc and desc[0] == 0:
            desc.pop(0)
        return ZZ.map(desc)

    gcd = gf_gcd(gf_gcd(to_gf(big_f), to_gf(g_lift), p, ZZ), to_gf(h_lift), p, ZZ)
    return gf_degree(gcd) <= 0


def _zmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _zsub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def decomposition_type(field, p):
    """The sorted (e_i, f_i) pairs of the primes above p.

    Valid whenever p does not divide the index of the equation order: either
    p is coprime to the discriminant, or the index test certifies it.  Other
    primes raise UnsupportedRamifiedPrimeError ("unsupported ramified prime").
    """
    _check_prime(p)
    factors = factor_mod_p(field.minpoly, p)
    if discriminant(field.minpoly) % p == 0:
        if not _dedekind_index_coprime(field.minpoly, p, factors):
            raise UnsupportedRamifiedPrimeError(
                f"unsupported ramified prime {p}: it divides the index of the equation order"
            )
    pairs = sorted((mult, len(fac) - 1) for fac, mult in factors)
    assert sum(e * f for e, f in pairs) == field.degree
    return pairs


def dedekind_zeta_local(field, p):
    """The local factor prod_i (1 - t^{f_i})^{-1} as an EulerForm in Y = t."""
    pairs = decomposition_type(field, p)
    return EulerForm.from_denominator([(0, f) for _, f in pairs])
