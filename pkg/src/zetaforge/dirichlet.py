"""Specializing Euler factors at primes and expanding Dirichlet series.

A bivariate factor W(X, Y) becomes the local factor at a rational prime p of
a base-extended zeta function by taking the product over primes above p of
W(p^f, p^f t^f) with t = p^{-s}.  Multiplying local expansions out to the
needed prime powers yields the global coefficients, which stay exact all the
way (integers in every case we generate, enforced loudly).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import primerange

from .laurent import EulerForm, LaurentPoly
from .families import make_W
from .numberfield import UnsupportedRamifiedPrimeError, decomposition_type


class DegreeMismatchError(ValueError):
    """The field degree does not match the base-extension parameter d."""


class GlobalExpansionError(ValueError):
    """A prime in range could not be handled; the whole expansion is refused."""


def type_specialized_W(w, pairs):
    """prod over (e, f) pairs of W(X^f, Y^f): the local factor shape for a
    prime with the given decomposition type, still bivariate in (X, Y)."""
    out = EulerForm(LaurentPoly.one(), ())
    for _, f in pairs:
        out = out * w.substitute_powers(f, f)
    return out


@dataclass(frozen=True)
class LocalFactor:
    """A local Euler factor at p, univariate in t = p^{-s}.

    numerator maps t-exponent -> integer coefficient; each denominator entry
    (c, b) stands for a factor (1 - c t^b) with c a power of p.
    """

    p: int
    numerator: tuple
    denominator: tuple

    @classmethod
    def from_euler(cls, w, p):
        if w.is_formal:
            raise ValueError(
                "local factor undefined: a denominator factor does not vanish "
                "in positive Y-degree, so the form has no Dirichlet expansion"
            )
        num = {}
        for (i, j), c in w.numerator.terms.items():
            if i < 0:
                scaled = Fraction(c, p ** (-i))
                if scaled.denominator != 1:
                    raise ValueError("non-integral local numerator coefficient")
                scaled = int(scaled)
            else:
                scaled = c * p**i
            num[j] = num.get(j, 0) + scaled
        numerator = tuple(sorted((j, c) for j, c in num.items() if c))
        denominator = tuple(sorted((p**a, b) for a, b in w.denominator))
        return cls(p, numerator, denominator)

    def expand(self, order):
        """Coefficients of t^0 .. t^order of the full rational function."""
        series = [0] * (order + 1)
        for j, c in self.numerator:
            if j < 0:
                raise ValueError("negative t-exponent in local numerator")
            if j <= order:
                series[j] += c
        for coef, b in self.denominator:
            for e in range(b, order + 1):
                series[e] += coef * series[e - b]
        return series


def local_factor(family, d, field, p, pairs=None):
    """The local factor of the pro-isomorphic zeta function of the family's
    lattice base-extended along `field`, at the rational prime p.

    `pairs` overrides the computed decomposition type (for primes the index
    test refuses)."""
    if field.degree != d:
        raise DegreeMismatchError(
            f"field degree {field.degree} != extension parameter d={d}"
        )
    if pairs is None:
        pairs = decomposition_type(field, p)
    w = type_specialized_W(make_W(family, d), pairs)
    return LocalFactor.from_euler(w, p)


def global_coefficients(family, d, field, limit):
    """Dirichlet coefficients b_1 .. b_limit, exact, by multiplicativity.

    Every prime up to the limit must admit a decomposition type; a refused
    ramified prime aborts the whole computation with a clear message.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if field.degree != d:
        raise DegreeMismatchError(
            f"field degree {field.degree} != extension parameter d={d}"
        )
    coeffs = [1] * (limit + 1)  # index 0 unused
    for p in primerange(2, limit + 1):
        kmax = 0
        q = p
        while q <= limit:
            kmax += 1
            q *= p
        try:
            series = local_factor(family, d, field, p).expand(kmax)
        except UnsupportedRamifiedPrimeError as exc:
            raise GlobalExpansionError(
                f"cannot expand to {limit}: prime {p} refused ({exc})"
            ) from exc
        for n in range(p, limit + 1, p):
            v = 0
            m = n
            while m % p == 0:
                v += 1
                m //= p
            coeffs[n] *= series[v]
    return coeffs[1:]


@dataclass(frozen=True)
class ShapeAbscissa:
    """Abscissa read off the denominator shape: max (a+1)/b over its factors.

    shape_verified records whether the numerator was independently confirmed
    not to move the rightmost pole (trivially, or by rebuilding the stored
    descent-sum presentation); when False the value is advisory only.
    """

    value: Fraction
    shape_verified: bool


def abscissa_from_shape(w):
    if not w.denominator:
        raise ValueError("no denominator factors: no pole to read off")
    if w.is_formal:
        raise ValueError(
            "abscissa undefined: a denominator factor does not vanish in "
            "positive Y-degree, so the series does not converge anywhere"
        )
    value = max(Fraction(a + 1, b) for a, b in w.denominator)
    verified = False
    if w.numerator == LaurentPoly.one():
        verified = True
    elif w.descent_data is not None:
        from .families import descent_form

        rebuilt = descent_form(list(w.descent_data))
        verified = rebuilt.numerator == w.numerator and sorted(
            w.descent_data
        ) == sorted(w.denominator)
    return ShapeAbscissa(value, verified)
