"""Exact bivariate Laurent polynomials and Euler-form rational functions.

A Laurent polynomial is stored as a dict mapping (xExp, yExp) to a nonzero
integer coefficient.  An Euler form is a fraction N(X,Y) / prod (1 - X^a Y^b)
where the denominator is kept as a multiset of exponent pairs and never
expanded unless an operation needs it.  All arithmetic is exact; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ResourceGuardError(RuntimeError):
    """Raised when an operation exceeds its documented size bound."""


class DegenerateSpecializationError(ValueError):
    """Raised when a specialization (e.g. X=1) kills a numerator."""


def _prune(terms):
    return {k: c for k, c in terms.items() if c != 0}


class LaurentPoly:
    """Bivariate Laurent polynomial with integer coefficients.

    Terms live in a dict {(xe, ye): coeff}; zero coefficients are never
    stored.  Instances are immutable by convention: no method mutates
    self.terms after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _prune(dict(terms or {}))

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff, xe=0, ye=0):
        return cls({(xe, ye): coeff})

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly(terms)

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        terms = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                k = (x1 + x2, y1 + y2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return LaurentPoly(terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structural helpers ------------------------------------------

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    def sorted_terms(self):
        """Terms as (coeff, xe, ye) sorted by (xe, ye)."""
        return [(self.terms[k], k[0], k[1]) for k in sorted(self.terms)]

    def lex_extremes(self):
        """((xe, ye) lexicographically smallest, largest) among the support."""
        if not self.terms:
            raise ValueError("zero polynomial has no extreme terms")
        keys = sorted(self.terms)
        return keys[0], keys[-1]

    # -- substitutions ------------------------------------------------

    def substitute_powers(self, fx, fy):
        """X -> X^fx, Y -> Y^fy."""
        return LaurentPoly({(x * fx, y * fy): c for (x, y), c in self.terms.items()})

    def substitute_y_monomial(self, xshift, ypow):
        """Y -> X^xshift * Y^ypow (used to push a bookkeeping variable into X,Y)."""
        return LaurentPoly(
            {(x + xshift * y, ypow * y): c for (x, y), c in self.terms.items()}
        )

    def invert(self):
        """X -> X^{-1}, Y -> Y^{-1}: every exponent pair is negated."""
        return LaurentPoly({(-x, -y): c for (x, y), c in self.terms.items()})

    def evaluate_x(self, xval):
        """Specialize X to an exact rational; returns {yExp: Fraction}."""
        xval = Fraction(xval)
        if xval == 0:
            raise ValueError("X must be specialized to a nonzero value")
        out = {}
        for (x, y), c in self.terms.items():
            out[y] = out.get(y, Fraction(0)) + c * xval**x
        return {y: c for y, c in out.items() if c != 0}

    # -- rendering ----------------------------------------------------

    def __str__(self):
        return render_poly(self, ascii_only=True)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def latex(self):
        return render_poly(self, ascii_only=False)


def _render_monomial(xe, ye, ascii_only):
    parts = []
    for var, e in (("X", xe), ("Y", ye)):
        if e == 0:
            continue
        if e == 1:
            parts.append(var)
        elif ascii_only:
            parts.append(f"{var}^{e}")
        else:
            parts.append(f"{var}^{{{e}}}")
    if not parts:
        return "1"
    return "*".join(parts) if ascii_only else " ".join(parts)


def render_poly(p, ascii_only=True):
    if not p.terms:
        return "0"
    chunks = []
    for coeff, xe, ye in p.sorted_terms():
        mono = _render_monomial(xe, ye, ascii_only)
        if mono == "1":
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mono
        else:
            body = f"{abs(coeff)}{'*' if ascii_only else ' '}{mono}"
        sign = "-" if coeff < 0 else "+"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    """Power-series prefix: coefficients of variable^0 .. variable^N."""

    variable: str
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def order(self):
        return len(self.coefficients) - 1

    def __getitem__(self, k):
        return self.coefficients[k]


class EulerForm:
    """Rational function N(X,Y) / prod_i (1 - X^{a_i} Y^{b_i}).

    The denominator is a multiset of pairs (a, b) with a >= 0 and b >= 1,
    stored sorted lexicographically.  No cancellation against the numerator
    is ever performed: the displayed formulas are kept verbatim.

    A *formal* form (``formal=True``) additionally admits factors with
    b <= 0.  Such a form is a perfectly good rational function — products,
    variable inversion, cross-multiplied equality, and serialization all
    work — but it has no power-series expansion in Y, so ``expand_series``
    and everything downstream of it refuse.  The only producers of formal
    forms are the descent-sum constructors, whose exponent tables can leave
    the series-expandable cone for large parameters.
    """

    __slots__ = ("numerator", "denominator", "descent_data")

    def __init__(self, numerator, denominator=(), descent_data=None, formal=False):
        for a, b in denominator:
            if a < 0 or (b < 1 and not formal):
                raise ValueError(f"bad denominator factor (1 - X^{a} Y^{b})")
        self.numerator = numerator
        self.denominator = tuple(sorted(tuple(f) for f in denominator))
        # Ordered monomial list (a_0, b_0), ..., (a_n, b_n) when the form was
        # built as a symmetric-group descent sum; None otherwise.
        self.descent_data = descent_data

    @property
    def is_formal(self):
        """True when some denominator factor has Y-exponent <= 0.

        Formal forms support only exact rational-function algebra; series
        expansion (and hence Dirichlet coefficients and abscissae) is
        undefined for them.
        """
        return any(b < 1 for _, b in self.denominator)

    @classmethod
    def from_denominator(cls, pairs, descent_data=None):
        """1 / prod (1 - X^a Y^b)."""
        return cls(LaurentPoly.one(), pairs, descent_data=descent_data)

    def __eq__(self, other):
        return (
            isinstance(other, EulerForm)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __mul__(self, other):
        return EulerForm(
            self.numerator * other.numerator,
            self.denominator + other.denominator,
            formal=self.is_formal or other.is_formal,
        )

    def __repr__(self):
        return f"EulerForm({self})"

    def __str__(self):
        den = "".join(f"(1 - {_render_monomial(a, b, True)})" for a, b in self.denominator)
        return f"({self.numerator}) / {den or '1'}"

    # -- operations from the contract ----------------------------------

    def substitute_powers(self, fx, fy):
        if fx < 1 or fy < 1:
            raise ValueError("substitution powers must be >= 1")
        data = None
        if self.descent_data is not None:
            data = tuple((a * fx, b * fy) for a, b in self.descent_data)
        return EulerForm(
            self.numerator.substitute_powers(fx, fy),
            [(a * fx, b * fy) for a, b in self.denominator],
            descent_data=data,
            formal=self.is_formal,
        )

    def denominator_poly(self):
        """The denominator expanded to a LaurentPoly."""
        prod = LaurentPoly.one()
        for a, b in self.denominator:
            prod = prod * LaurentPoly({(0, 0): 1, (a, b): -1})
        return prod

    def invert_variables(self):
        """Data expressing W(X^{-1}, Y^{-1}) in terms of W(X, Y).

        Applying (1 - X^{-a}Y^{-b}) = -X^{-a}Y^{-b}(1 - X^a Y^b) to each of
        the k denominator factors gives

            W(X^{-1},Y^{-1}) = sign * X^A Y^B * N(X^{-1},Y^{-1})/N(X,Y) * W(X,Y)

        with sign = (-1)^k, A = sum a_i, B = sum b_i.  Returns the numerator
        ratio as a pair of Laurent polynomials plus (sign, A, B).
        """
        k = len(self.denominator)
        a_total = sum(a for a, _ in self.denominator)
        b_total = sum(b for _, b in self.denominator)
        sign = -1 if k % 2 else 1
        return (self.numerator.invert(), self.numerator), (sign, a_total, b_total)

    def expand_series(self, xval, order):
        """Coefficients of Y^0..Y^order of the power-series expansion at X=xval.

        The numerator is evaluated at X=xval first (so negative X-exponents
        are harmless) and each denominator factor is expanded geometrically
        via the recurrence s[e] += xval^a * s[e-b].
        """
        if order < 0:
            raise ValueError("order must be >= 0")
        if self.is_formal:
            a, b = min(self.denominator, key=lambda f: f[1])
            raise ValueError(
                f"series expansion undefined: denominator factor "
                f"(1 - X^{a} Y^{b}) does not vanish in positive Y-degree"
            )
        xval = Fraction(xval)
        coeffs = self.numerator.evaluate_x(xval)
        coeffs = {y: c for y, c in coeffs.items() if y <= order}
        low = min(coeffs, default=0)
        if low < 0:
            raise ValueError("numerator has negative Y-exponents; series is not a power series")
        series = [coeffs.get(e, Fraction(0)) for e in range(order + 1)]
        for a, b in self.denominator:
            ratio = xval**a
            for e in range(b, order + 1):
                series[e] += ratio * series[e - b]
        return TruncatedSeries("Y", series)

    def ratfunc_equal(self, other):
        """Exact equality as rational functions, by cross-multiplication."""
        mine = list(self.denominator)
        theirs = list(other.denominator)
        # Shared factors cancel: they are nonzero divisors in the Laurent ring.
        for f in list(mine):
            if f in theirs:
                mine.remove(f)
                theirs.remove(f)
        lhs = self.numerator
        for a, b in theirs:
            lhs = lhs * LaurentPoly({(0, 0): 1, (a, b): -1})
        rhs = other.numerator
        for a, b in mine:
            rhs = rhs * LaurentPoly({(0, 0): 1, (a, b): -1})
        return lhs == rhs

    # -- serialization -------------------------------------------------

    def to_json_dict(self):
        return {
            "numerator": [[str(c), xe, ye] for c, xe, ye in self.numerator.sorted_terms()],
            "denominator": [[a, b] for a, b in self.denominator],
        }

    @classmethod
    def from_json_dict(cls, data, formal=False):
        num = LaurentPoly(
            {(int(xe), int(ye)): int(c) for c, xe, ye in data["numerator"]}
        )
        return cls(
            num, [(int(a), int(b)) for a, b in data["denominator"]], formal=formal
        )

    def latex(self):
        num = self.numerator.latex()
        if not self.denominator:
            return num
        den = "".join(
            f"\\left(1 - {_render_monomial(a, b, False)}\\right)"
            for a, b in self.denominator
        )
        return f"\\frac{{{num}}}{{{den}}}"
