"""Command-line surface: JSON emitters over the library plus a verify command.

Every command is pure input -> output.  Emission is byte-deterministic:
sorted keys, compact separators, canonical term order, big integers as
decimal strings.  Exit codes: 0 success, 1 refused input (domain errors and
resource guards), 2 internal assertion failure.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from functools import wraps
from math import gcd

import click

from . import families as fam
from .dirichlet import (
    DegreeMismatchError,
    GlobalExpansionError,
    abscissa_from_shape,
    global_coefficients,
    local_factor,
)
from .families import UnsupportedFamilyError, make_W, parse_family, weight
from .laurent import DegenerateSpecializationError, ResourceGuardError
from .numberfield import (
    NumberField,
    UnsupportedRamifiedPrimeError,
    decomposition_type,
)
from .oracle import (
    abelian_lattice,
    count_proisomorphic,
    heisenberg_lattice,
    lattice_from_json,
)
from .signed_perms import verify_bm_identity, verify_sublemma
from .symmetry import (
    check_weight_conjecture,
    extract_functional_equation,
    predicted_symmetry,
    reduced_leading_ratio,
    verify_functional_equation,
)

SCHEMA = "zetaforge/1"

_REFUSALS = (
    UnsupportedFamilyError,
    UnsupportedRamifiedPrimeError,
    DegreeMismatchError,
    GlobalExpansionError,
    DegenerateSpecializationError,
    ResourceGuardError,
    ValueError,
)


def _emit(payload):
    click.echo(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _guarded(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _REFUSALS as exc:
            click.echo(f"refused: {exc}", err=True)
            sys.exit(1)
        except AssertionError as exc:
            click.echo(f"internal assertion failure: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _parse_field(text):
    try:
        coeffs = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ValueError(f"--minpoly wants comma-separated integers, got {text!r}")
    return NumberField(coeffs)


def _parse_type(text):
    pairs = []
    for chunk in text.split(";"):
        e, f = chunk.split(",")
        pairs.append((int(e), int(f)))
    return pairs


def _parse_lattice(text):
    if text.startswith("file:"):
        with open(text[5:], encoding="utf-8") as handle:
            return lattice_from_json(handle.read())
    parts = text.split(":")
    if parts[0] == "heisenberg" and len(parts) == 2:
        return heisenberg_lattice(int(parts[1]))
    if parts[0] == "abelian" and len(parts) == 2:
        return abelian_lattice(int(parts[1]))
    raise ValueError(
        f"--lattice wants heisenberg:m, abelian:n or file:<path>, got {text!r}"
    )


def _frac_str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@click.group()
def main():
    """Exact local factors of pro-isomorphic zeta functions under base extension."""


@main.command("families")
@click.option("--family", "family_id", required=True, help="e.g. heisenberg:2, free:3:2, q5")
@click.option("--d", type=int, default=1, show_default=True, help="base-extension degree")
@click.option("--latex", is_flag=True, help="emit LaTeX instead of JSON")
@_guarded
def families_cmd(family_id, d, latex):
    """Print W_{L,d}(X, Y) for a family."""
    family = parse_family(family_id)
    w = make_W(family, d)
    if latex:
        click.echo(w.latex())
        return
    _emit({"schema": SCHEMA, "family": str(family), "d": d, **w.to_json_dict()})


@main.command("funceq")
@click.option("--family", "family_id", required=True)
@click.option("--d", type=int, default=1, show_default=True)
@_guarded
def funceq_cmd(family_id, d):
    """Extract the functional equation W(1/X, 1/Y) = sign X^a Y^b W(X, Y)."""
    family = parse_family(family_id)
    if family.kind == "abelian":
        raise UnsupportedFamilyError(
            "abelian lattices are outside the functional-equation table"
        )
    w = make_W(family, d)
    factor = extract_functional_equation(w)
    if factor is None:
        _emit(
            {
                "schema": SCHEMA,
                "exists": False,
                "sign": None,
                "a": None,
                "b": None,
                "weight": None,
                "conjecture_holds": None,
            }
        )
        return
    assert verify_functional_equation(w, factor)
    wt = weight(family)
    _emit(
        {
            "schema": SCHEMA,
            "exists": True,
            "sign": factor.sign,
            "a": factor.a,
            "b": factor.b,
            "weight": wt,
            "conjecture_holds": factor.b == wt,
        }
    )


@main.command("decompose")
@click.option("--minpoly", required=True, help="integer coefficients, constant term first")
@click.option("--p", type=int, required=True)
@_guarded
def decompose_cmd(minpoly, p):
    """Decomposition type (e_i, f_i) of p in the field, with residue sizes."""
    field = _parse_field(minpoly)
    pairs = decomposition_type(field, p)
    _emit(
        {
            "schema": SCHEMA,
            "pairs": [[e, f] for e, f in pairs],
            "qp": [str(p**f) for _, f in pairs],
        }
    )


@main.command("euler")
@click.option("--family", "family_id", required=True)
@click.option("--d", type=int, default=1, show_default=True)
@click.option("--minpoly", required=True)
@click.option("--p", type=int, required=True)
@click.option("--type", "type_override", default=None,
              help="semicolon-separated e,f pairs overriding the computed type")
@_guarded
def euler_cmd(family_id, d, minpoly, p, type_override):
    """Local Euler factor at p of the base-extended zeta function, in t = p^-s."""
    family = parse_family(family_id)
    field = _parse_field(minpoly)
    pairs = _parse_type(type_override) if type_override else None
    lf = local_factor(family, d, field, p, pairs=pairs)
    _emit(
        {
            "schema": SCHEMA,
            "p": str(lf.p),
            "numerator": [[str(c), j] for j, c in lf.numerator],
            "denominator": [[str(c), b] for c, b in lf.denominator],
        }
    )


@main.command("dirichlet")
@click.option("--family", "family_id", required=True)
@click.option("--d", type=int, default=1, show_default=True)
@click.option("--minpoly", required=True)
@click.option("--n", "--N", "limit", type=int, required=True, help="expand b_1..b_N")
@_guarded
def dirichlet_cmd(family_id, d, minpoly, limit):
    """Global Dirichlet coefficients b_1..b_N, exactly."""
    family = parse_family(family_id)
    field = _parse_field(minpoly)
    coeffs = global_coefficients(family, d, field, limit)
    _emit({"schema": SCHEMA, "coefficients": [str(c) for c in coeffs]})


@main.command("abscissa")
@click.option("--family", "family_id", required=True)
@click.option("--d", type=int, default=1, show_default=True)
@_guarded
def abscissa_cmd(family_id, d):
    """Abscissa of convergence as an exact rational "num/den"."""
    family = parse_family(family_id)
    value = fam.abscissa(family, d)
    shape = abscissa_from_shape(make_W(family, d))
    assert value == shape.value
    _emit(
        {
            "schema": SCHEMA,
            "abscissa": _frac_str(value),
            "shape_verified": shape.shape_verified,
        }
    )


@main.command("oracle")
@click.option("--lattice", "lattice_id", required=True,
              help="heisenberg:m, abelian:n, or file:<path> with a JSON tensor")
@click.option("--p", type=int, required=True)
@click.option("--k", type=int, required=True)
@_guarded
def oracle_cmd(lattice_id, p, k):
    """Count index-p^k subrings pro-isomorphic to the lattice, by brute force."""
    lattice = _parse_lattice(lattice_id)
    _emit({"schema": SCHEMA, "count": count_proisomorphic(lattice, p, k)})


# ---------------------------------------------------------------------------
# verify suites


def _fe_table_families():
    out = []
    for c in range(2, 5):
        for g in range(1, 5):
            out.append(fam.free(c, g))
    out += [fam.heisenberg(m) for m in range(1, 7)]
    for m in range(1, 7):
        for n in range(2, 9):
            if m + n <= 8:
                out.append(fam.lmn(m, n))
    out += [fam.maxclass(c) for c in range(2, 6)]
    out += [fam.f4(), fam.q5()]
    return out


def _suite_bm_identity(max_m):
    for m in range(1, min(max_m, 6) + 1):
        if not verify_bm_identity(m):
            click.echo(f"MISMATCH bm-identity m={m}")
            return False
        click.echo(f"ok bm-identity m={m}")
    return True


def _suite_sublemma(max_m):
    for m in range(1, min(max_m, 5) + 1):
        if not verify_sublemma(m):
            click.echo(f"MISMATCH sublemma m={m}")
            return False
        click.echo(f"ok sublemma m={m}")
    return True


def _suite_bruhat(max_m):
    for m in range(1, min(max_m, 4) + 1):
        for d in range(1, 4):
            collapsed = fam.heisenberg_from_bruhat(m, d)
            direct = make_W(fam.heisenberg(m), d)
            if not collapsed.ratfunc_equal(direct):
                click.echo(f"MISMATCH bruhat m={m} d={d}")
                return False
        click.echo(f"ok bruhat m={m} d=1..3")
    return True


def _suite_funceq(_max_m):
    for family in _fe_table_families():
        for d in range(1, 5):
            w = make_W(family, d)
            got = extract_functional_equation(w)
            want = predicted_symmetry(family, d)
            if got != want or not verify_functional_equation(w, got):
                click.echo(f"MISMATCH funceq {family} d={d}: {got} != {want}")
                return False
        click.echo(f"ok funceq {family}")
    for d in range(1, 5):
        if extract_functional_equation(make_W(fam.bk(), d)) is not None:
            click.echo(f"MISMATCH funceq bk d={d}: unexpected symmetry")
            return False
    click.echo("ok funceq bk (none exists)")
    return True


def _suite_weights(_max_m):
    for family in _fe_table_families():
        for d in range(1, 5):
            if not check_weight_conjecture(family, d):
                click.echo(f"MISMATCH weight {family} d={d}")
                return False
        click.echo(f"ok weight {family}")
    return True


def _suite_bk_ratio(_max_m):
    for d in range(1, 5):
        got = reduced_leading_ratio(make_W(fam.bk(), d))
        if got != (102, Fraction(1, 2)):
            click.echo(f"MISMATCH bk-ratio d={d}: {got}")
            return False
    click.echo("ok bk-ratio d=1..4 -> (102, 1/2)")
    return True


def _suite_cross_family(_max_m):
    for d in range(1, 5):
        h = make_W(fam.heisenberg(1), d)
        for other in (fam.free(2, 2), fam.maxclass(2)):
            if not make_W(other, d).ratfunc_equal(h):
                click.echo(f"MISMATCH cross-family {other} d={d}")
                return False
    click.echo("ok cross-family free:2:2 = heisenberg:1 = maxclass:2, d=1..4")
    return True


def _series_int(form, p, k):
    c = form.expand_series(p, k)[k]
    assert c.denominator == 1
    return int(c)


def _suite_oracle(_max_m):
    count = count_proisomorphic
    for n in (2, 3):
        w = make_W(fam.abelian(n), 1)
        for p in (2, 3):
            for k in range(0, 4):
                got = count(abelian_lattice(n), p, k)
                want = _series_int(w, p, k)
                if got != want:
                    click.echo(f"MISMATCH oracle Z^{n} p={p} k={k}: {got} != {want}")
                    return False
        click.echo(f"ok oracle Z^{n} p=2,3 k<=3")
    w1 = make_W(fam.heisenberg(1), 1)
    for p in (2, 3):
        for k in range(0, 5):
            got = count(heisenberg_lattice(1), p, k)
            want = _series_int(w1, p, k)
            if got != want:
                click.echo(f"MISMATCH oracle H1 p={p} k={k}: {got} != {want}")
                return False
    click.echo("ok oracle H1 p=2,3 k<=4")
    w2 = make_W(fam.heisenberg(2), 1)
    got = count(heisenberg_lattice(2), 2, 3)
    want = _series_int(w2, 2, 3)
    if got != want or got != 240:
        click.echo(f"MISMATCH oracle H2 p=2 k=3: {got} != {want} (expect 240)")
        return False
    click.echo("ok oracle H2 p=2 k=3 -> 240")
    return True


def _suite_abscissa(_max_m):
    cases = []
    for m in range(1, 7):
        cases += [(fam.heisenberg(m), d) for d in range(1, 5)]
    for c in range(2, 6):
        cases += [(fam.maxclass(c), d) for d in range(1, 5)]
    for c in range(2, 5):
        for g in range(1, 5):
            cases += [(fam.free(c, g), d) for d in range(1, 5)]
    cases += [(fam.f4(), d) for d in range(1, 5)]
    cases += [(fam.q5(), d) for d in range(1, 5)]
    for family, d in cases:
        closed = fam.abscissa(family, d)
        shape = abscissa_from_shape(make_W(family, d))
        if closed != shape.value:
            click.echo(f"MISMATCH abscissa {family} d={d}: {closed} != {shape.value}")
            return False
        if family.kind == "maxclass" and d == 1 and closed != 2:
            click.echo(f"MISMATCH abscissa {family} d=1 should be 2, got {closed}")
            return False
    click.echo(f"ok abscissa on {len(cases)} family/d pairs")
    return True


def _suite_numberfield(_max_m):
    from sympy import primerange

    gaussian = NumberField((1, 0, 1))
    expected = {2: [(2, 1)], 3: [(1, 2)], 5: [(1, 1), (1, 1)]}
    for p, want in expected.items():
        got = decomposition_type(gaussian, p)
        if got != want:
            click.echo(f"MISMATCH decomposition p={p}: {got} != {want}")
            return False
    click.echo("ok gaussian decomposition types p=2,3,5")
    family = fam.heisenberg(1)
    for p in primerange(2, 51):
        lf = local_factor(family, 2, gaussian, p)
        want = []
        for _, f in decomposition_type(gaussian, p):
            want.append((p ** (4 * f), 2 * f))
            want.append((p ** (5 * f), 2 * f))
        if lf.numerator != ((0, 1),) or sorted(lf.denominator) != sorted(want):
            click.echo(f"MISMATCH local factor at p={p}")
            return False
    click.echo("ok H1 x gaussian local factors match shifted zeta products, p<=50")
    coeffs = global_coefficients(family, 2, gaussian, 200)
    if coeffs[0] != 1 or any(c < 0 for c in coeffs):
        click.echo("MISMATCH global coefficients: b_1 != 1 or negative entry")
        return False
    for a in range(1, 201):
        for b in range(1, 201 // a + 1):
            if a * b <= 200 and gcd(a, b) == 1:
                if coeffs[a * b - 1] != coeffs[a - 1] * coeffs[b - 1]:
                    click.echo(f"MISMATCH multiplicativity at {a}*{b}")
                    return False
    click.echo("ok global coefficients to 200: nonnegative, multiplicative")
    return True


_SUITES = {
    "bm-identity": _suite_bm_identity,
    "sublemma": _suite_sublemma,
    "bruhat": _suite_bruhat,
    "funceq": _suite_funceq,
    "weights": _suite_weights,
    "bk-ratio": _suite_bk_ratio,
    "cross-family": _suite_cross_family,
    "oracle": _suite_oracle,
    "abscissa": _suite_abscissa,
    "numberfield": _suite_numberfield,
}


@main.command("verify")
@click.option("--suite", default="all", show_default=True,
              type=click.Choice(sorted(_SUITES) + ["all"]))
@click.option("--max-m", "max_m", type=int, default=5, show_default=True)
@_guarded
def verify_cmd(suite, max_m):
    """Re-run the exhaustive identity suites; exit 0 iff everything matches."""
    names = list(_SUITES) if suite == "all" else [suite]
    for name in names:
        if not _SUITES[name](max_m):
            click.echo(f"FAIL {name}")
            sys.exit(1)
        click.echo(f"PASS {name}")


if __name__ == "__main__":
    main()
