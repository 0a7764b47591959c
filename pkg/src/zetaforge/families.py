"""Closed-form local factors W(X, Y) for the supported lattice families.

Each constructor returns the rational function exactly as displayed, with the
denominator kept as a factor multiset and no simplification.  The bookkeeping
variable of the pre-collapse hyperoctahedral sum is exposed separately via
bruhat_gsp_sum, so the collapse can be confirmed against the symmetric-group
form by cross-multiplication.

Degree-d base extension enters only through the X-exponents; d >= 1 always.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from .laurent import EulerForm, LaurentPoly, ResourceGuardError
from .signed_perms import enumerate_B, enumerate_S, perm_stats, stats

MAX_HEISENBERG_M = 8
MAX_FREE_C = 6
MAX_FREE_G = 6
MAX_LMN_TOTAL = 10
MAX_BRUHAT_M = 5

KINDS = ("abelian", "free", "heisenberg", "lmn", "maxclass", "f4", "q5", "bk")


class UnsupportedFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    kind: str
    params: tuple = ()

    def __str__(self):
        return ":".join([self.kind, *map(str, self.params)])


def abelian(n):
    if n < 1:
        raise ValueError("abelian rank must be >= 1")
    return Family("abelian", (n,))


def free(c, g):
    if c < 2 or g < 1:
        raise ValueError("free nilpotent family needs class >= 2, generators >= 1")
    if c > MAX_FREE_C or g > MAX_FREE_G:
        raise ResourceGuardError(
            f"free family capped at c <= {MAX_FREE_C}, g <= {MAX_FREE_G}"
        )
    return Family("free", (c, g))


def heisenberg(m):
    if m < 1:
        raise ValueError("heisenberg index must be >= 1")
    if m > MAX_HEISENBERG_M:
        raise ResourceGuardError(f"heisenberg family capped at m <= {MAX_HEISENBERG_M}")
    return Family("heisenberg", (m,))


def lmn(m, n):
    if m < 1 or n < 2:
        raise ValueError("lmn family needs m >= 1, n >= 2")
    if m + n > MAX_LMN_TOTAL:
        raise ResourceGuardError(f"lmn family capped at m + n <= {MAX_LMN_TOTAL}")
    return Family("lmn", (m, n))


def maxclass(c):
    if c < 2:
        raise ValueError("maximal-class family needs c >= 2")
    return Family("maxclass", (c,))


def f4():
    return Family("f4")


def q5():
    return Family("q5")


def bk():
    return Family("bk")


_ARITY = {"abelian": 1, "free": 2, "heisenberg": 1, "lmn": 2, "maxclass": 1,
          "f4": 0, "q5": 0, "bk": 0}
_MAKERS = {"abelian": abelian, "free": free, "heisenberg": heisenberg,
           "lmn": lmn, "maxclass": maxclass, "f4": f4, "q5": q5, "bk": bk}


def parse_family(text):
    """Parse a CLI identifier like "heisenberg:2" or "free:3:2" or "q5"."""
    parts = text.strip().lower().split(":")
    kind, args = parts[0], parts[1:]
    if kind not in _MAKERS:
        raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
    if len(args) != _ARITY[kind]:
        raise ValueError(f"family {kind!r} takes {_ARITY[kind]} parameter(s), got {len(args)}")
    return _MAKERS[kind](*(int(a) for a in args))


# ---------------------------------------------------------------------------
# Building blocks


def witt_rank(g, i):
    """Rank of the i-th lower-central quotient of the free Lie ring on g
    generators: (1/i) * sum over j | i of mu(j) g^(i/j)."""
    if g < 1 or i < 1:
        raise ValueError("witt_rank needs g >= 1, i >= 1")
    total = sum(int(mobius(j)) * g ** (i // j) for j in divisors(i))
    assert total % i == 0
    return total // i


def free_alpha_beta(c, g, d):
    """(alpha, beta(d)) for the free nilpotent family of class c on g generators.

    alpha = (1/g) sum_{i=1}^{c} i*m_i and
    beta(d) = 2 m_2 + ... + (c-1) m_{c-1} + d*c*m_c, with m_i the Witt ranks.
    """
    ranks = {i: witt_rank(g, i) for i in range(1, c + 1)}
    alpha_num = sum(i * ranks[i] for i in range(1, c + 1))
    assert alpha_num % g == 0, "g divides every i*m_i, so alpha is integral"
    alpha = alpha_num // g
    beta = sum(i * ranks[i] for i in range(2, c)) + d * c * ranks[c]
    return alpha, beta


def descent_form(monomials):
    """Euler form with numerator sum_{w in S_n} X^{-l(w)} prod_{i in Des(w)} M_i
    and denominator prod_{i=0}^{n} (1 - M_i), for M_i = X^{a_i} Y^{b_i}.

    `monomials` is the ordered list (a_0, b_0), ..., (a_n, b_n); descents of
    S_n only ever touch indices 1..n-1.
    """
    n = len(monomials) - 1
    num = LaurentPoly.zero()
    for sigma in enumerate_S(n):
        st = perm_stats(sigma)
        xe, ye = -st.length, 0
        for i in range(1, n):
            if st.des_mask >> i & 1:
                xe += monomials[i][0]
                ye += monomials[i][1]
        num = num + LaurentPoly.monomial(1, xe, ye)
    # formal=True: interior exponents of some large instances leave the
    # series-expandable cone (Y-exponent <= 0); the descent sum is still a
    # well-defined rational function and is stored verbatim.
    return EulerForm(num, monomials, descent_data=tuple(monomials), formal=True)


def lmn_monomials(m, n, d):
    """The exponent pairs (beta_i, gamma_i), i = 0..n, of the lmn family."""
    r1 = comb(m + n - 2, m - 1)
    r2 = comb(m + n - 1, m)
    out = []
    for i in range(n + 1):
        if i == 0:
            beta = Fraction(d * n * (r1 + r2))
            gamma = r1 + n
        elif i == n:
            beta = Fraction(d * n * (r1 + r2) + comb(2 * m + n - 2, 2 * m - 1))
            gamma = r2 + n
        else:
            beta = Fraction(i * (n - i) + d * (r1 + r2) * ((m - 1) * n + i))
            for j in range(1, i + 1):
                beta += (
                    (1 + Fraction((m - 1) * (i - j + 1), n - j + 1))
                    * comb(m + j - 2, m - 1)
                    * comb(m + n - j - 1, m - 1)
                )
            gamma = (1 + r1) * ((m - 1) * n + i) - m * (m - 1) * r1
        if beta.denominator != 1:
            raise AssertionError(f"beta_{i} is not integral for (m,n)=({m},{n})")
        out.append((int(beta), gamma))
    return out


# ---------------------------------------------------------------------------
# The W constructors


def make_W(family, d):
    """The exact local factor W(X, Y) of the given family at extension degree d."""
    if d < 1:
        raise ValueError("extension degree d must be >= 1")
    kind, p = family.kind, family.params
    if kind == "abelian":
        n = p[0]
        return EulerForm.from_denominator([(i, 1) for i in range(n)])
    if kind == "free":
        c, g = p
        alpha, beta = free_alpha_beta(c, g, d)
        return EulerForm.from_denominator([(beta + j, alpha) for j in range(g)])
    if kind == "heisenberg":
        m = p[0]
        zs = [
            (comb(m + 1, 2) - comb(j + 1, 2) + 2 * m * d, m + 1)
            for j in range(m + 1)
        ]
        return descent_form(zs)
    if kind == "lmn":
        return descent_form(lmn_monomials(*p, d))
    if kind == "maxclass":
        c = p[0]
        return EulerForm.from_denominator(
            [((c - 1) * (2 * d + c - 2), comb(c, 2) + 1), (2 * d + 2 * c - 3, c)]
        )
    if kind == "f4":
        return EulerForm.from_denominator([(16 + 10 * d, 15)])
    if kind == "q5":
        return EulerForm.from_denominator([(6 + 6 * d, 6), (3 + 3 * d, 3)])
    if kind == "bk":
        num = LaurentPoly(
            {
                (0, 0): 1,
                (84 + 201 * d, 102): 1,
                (85 + 201 * d, 102): 2,
                (170 + 402 * d, 204): 2,
            }
        )
        return EulerForm(num, [(84 + 201 * d, 102), (171 + 402 * d, 204)])
    raise UnsupportedFamilyError(kind)


def bruhat_gsp_sum(m):
    """The full hyperoctahedral sum over B_m, in variables (X, T):

        sum_{w in B_m} X^{-l(w)} prod_{i in Des(w)} Xt_i
        / prod_{i=0}^{m} (1 - Xt_i),

    with Xt_0 = X^{C(m+1,2)} T and Xt_i = X^{2(C(m+1,2)-C(i+1,2))} T^2.
    Descents live in {0, ..., m-1}, so Xt_m appears only in the denominator.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > MAX_BRUHAT_M:
        raise ResourceGuardError(f"bruhat sum capped at m <= {MAX_BRUHAT_M}")
    monos = [(comb(m + 1, 2), 1)]
    monos += [(2 * (comb(m + 1, 2) - comb(i + 1, 2)), 2) for i in range(1, m + 1)]
    num = LaurentPoly.zero()
    for w in enumerate_B(m):
        st = stats(w)
        xe, te = -st.length, 0
        for i in range(m):
            if st.des_mask >> i & 1:
                xe += monos[i][0]
                te += monos[i][1]
        num = num + LaurentPoly.monomial(1, xe, te)
    return EulerForm(num, monos)


def heisenberg_from_bruhat(m, d):
    """Substitute T -> X^{2md} Y^{m+1} into bruhat_gsp_sum(m).

    This sends Xt_0 to Z_0 and Xt_i to Z_i^2, so the result should equal
    make_W(heisenberg(m), d) as a rational function (the B_m sum collapses).
    """
    form = bruhat_gsp_sum(m)
    shift, ypow = 2 * m * d, m + 1
    num = form.numerator.substitute_y_monomial(shift, ypow)
    den = [(a + shift * b, ypow * b) for a, b in form.denominator]
    return EulerForm(num, den)


# ---------------------------------------------------------------------------
# Weights and abscissae


def weight(family):
    """The grading weight wt(L): minimal sum of i * rank(L_i) over gradings."""
    kind, p = family.kind, family.params
    if kind == "abelian":
        raise UnsupportedFamilyError("no functional-equation weight for abelian lattices")
    if kind == "free":
        c, g = p
        alpha, _ = free_alpha_beta(c, g, 1)
        return g * alpha
    if kind == "heisenberg":
        return 2 * (p[0] + 1)
    if kind == "lmn":
        m, n = p
        return comb(m + n - 2, m - 1) + comb(m + n - 1, m) + 2 * n
    if kind == "maxclass":
        return comb(p[0] + 1, 2) + 1
    return {"f4": 15, "q5": 9, "bk": 102}[kind]


def abscissa(family, d):
    """Abscissa of convergence of the global zeta function, as an exact rational."""
    if d < 1:
        raise ValueError("extension degree d must be >= 1")
    kind, p = family.kind, family.params
    if kind == "abelian":
        return Fraction(p[0])
    if kind == "free":
        c, g = p
        alpha, beta = free_alpha_beta(c, g, d)
        return Fraction(beta + g, alpha)
    if kind == "heisenberg":
        m = p[0]
        return Fraction(m, 2) + Fraction(2 * m * d + 1, m + 1)
    if kind == "lmn":
        pairs = lmn_monomials(*p, d)
        if any(g <= 0 for _, g in pairs):
            raise ValueError(
                f"abscissa undefined for {family}: denominator exponent data "
                "includes a non-positive Y-exponent, so the series does not converge"
            )
        return max(Fraction(b + 1, g) for b, g in pairs)
    if kind == "maxclass":
        # Stated as "2 when d = 1" plus a c >= 3 branch; both are values of
        # the same two-term maximum, which is also correct at c = 2.
        c = p[0]
        return max(
            Fraction(2 * (d + c - 1), c),
            Fraction((c - 1) * (2 * d + c - 2) + 1, comb(c, 2) + 1),
        )
    if kind == "f4":
        return Fraction(17 + 10 * d, 15)
    if kind == "q5":
        return d + Fraction(4, 3)
    if kind == "bk":
        w = make_W(family, d)
        return max(Fraction(a + 1, b) for a, b in w.denominator)
    raise UnsupportedFamilyError(kind)
