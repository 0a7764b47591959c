"""Closed-form W constructors, weights, and abscissae, pinned numerically."""

from fractions import Fraction

import pytest

from zetaforge import (
    UnsupportedFamilyError,
    abelian,
    abscissa,
    bk,
    bruhat_gsp_sum,
    f4,
    free,
    heisenberg,
    heisenberg_from_bruhat,
    lmn,
    make_W,
    maxclass,
    parse_family,
    q5,
    weight,
)
from zetaforge.families import free_alpha_beta, lmn_monomials, witt_rank
from zetaforge.laurent import LaurentPoly, ResourceGuardError


def test_parse_family_round_trips():
    for text in ("abelian:3", "free:3:2", "heisenberg:2", "lmn:1:2",
                 "maxclass:4", "f4", "q5", "bk"):
        assert str(parse_family(text)) == text
    assert parse_family("  HEISENBERG:2 ") == heisenberg(2)


def test_parse_family_rejects_garbage():
    with pytest.raises(ValueError, match="unknown family"):
        parse_family("borel:2")
    with pytest.raises(ValueError, match="parameter"):
        parse_family("heisenberg")
    with pytest.raises(ValueError, match="parameter"):
        parse_family("f4:1")


def test_constructor_domain_checks():
    for bad in (lambda: abelian(0), lambda: free(1, 2), lambda: free(2, 0),
                lambda: heisenberg(0), lambda: lmn(0, 2), lambda: lmn(1, 1),
                lambda: maxclass(1)):
        with pytest.raises(ValueError):
            bad()


def test_resource_guards():
    with pytest.raises(ResourceGuardError):
        heisenberg(9)
    with pytest.raises(ResourceGuardError):
        free(7, 2)
    with pytest.raises(ResourceGuardError):
        lmn(5, 6)
    with pytest.raises(ResourceGuardError):
        bruhat_gsp_sum(6)


def test_witt_ranks():
    assert [witt_rank(2, i) for i in (1, 2, 3, 6)] == [2, 1, 2, 9]
    assert witt_rank(3, 2) == 3
    # dimension count: sum over i <= c of m_i equals the rank of the free
    # class-c quotient; for g=2, c=3 that is 2 + 1 + 2 = 5
    assert sum(witt_rank(2, i) for i in (1, 2, 3)) == 5


@pytest.mark.parametrize("d", [1, 2, 3])
def test_free_alpha_beta(d):
    assert free_alpha_beta(2, 2, d) == (2, 2 * d)
    assert free_alpha_beta(3, 2, d) == (5, 2 + 6 * d)


def test_abelian_form_and_carlitz_series():
    w = make_W(abelian(5), 1)
    assert w.numerator == LaurentPoly.one()
    assert w.denominator == ((0, 1), (1, 1), (2, 1), (3, 1), (4, 1))
    # sublattice counts of Z^5 at p = 2: the Gaussian binomials C(4+k, k)_2
    series = make_W(abelian(5), 1).expand_series(2, 3)
    assert [series[k] for k in range(4)] == [1, 31, 651, 11811]


def test_heisenberg_forms():
    w1 = make_W(heisenberg(1), 1)
    assert w1.numerator == LaurentPoly.one()
    assert w1.denominator == ((2, 2), (3, 2))

    w2 = make_W(heisenberg(2), 1)
    assert w2.denominator == ((4, 3), (6, 3), (7, 3))
    assert w2.numerator == LaurentPoly({(0, 0): 1, (5, 3): 1})


def test_heisenberg_collapse_to_symmetric_form():
    for m in (1, 2, 3):
        for d in (1, 2):
            assert heisenberg_from_bruhat(m, d).ratfunc_equal(
                make_W(heisenberg(m), d)
            )


def test_bruhat_sum_m1_by_hand():
    form = bruhat_gsp_sum(1)
    assert form.numerator == LaurentPoly({(0, 0): 1, (0, 1): 1})
    assert form.denominator == ((0, 2), (1, 1))


def test_lmn_small_instance():
    assert lmn_monomials(1, 2, 1) == [(6, 3), (5, 2), (8, 4)]
    w = make_W(lmn(1, 2), 1)
    assert w.denominator == ((5, 2), (6, 3), (8, 4))
    assert w.numerator == LaurentPoly({(0, 0): 1, (4, 2): 1})
    assert not w.is_formal or all(b >= 1 for _, b in w.denominator)


def test_lmn_large_instance_is_formal():
    # the interior exponent pair of lmn(4, 2) has negative Y-degree; the
    # rational function is still exact, but has no Dirichlet expansion
    w = make_W(lmn(4, 2), 1)
    assert w.is_formal
    assert (74, -13) in w.denominator
    with pytest.raises(ValueError, match="series expansion undefined"):
        w.expand_series(2, 2)


def test_maxclass_forms():
    w = make_W(maxclass(3), 1)
    assert w.numerator == LaurentPoly.one()
    assert w.denominator == ((5, 3), (6, 4))
    # c = 2 coincides with the first Heisenberg factor
    assert make_W(maxclass(2), 2).ratfunc_equal(make_W(heisenberg(1), 2))


def test_rigid_forms():
    assert make_W(f4(), 1).denominator == ((26, 15),)
    assert make_W(f4(), 3).denominator == ((46, 15),)
    assert make_W(q5(), 1).denominator == ((6, 3), (12, 6))

    w = make_W(bk(), 1)
    assert w.denominator == ((285, 102), (573, 204))
    assert w.numerator == LaurentPoly(
        {(0, 0): 1, (285, 102): 1, (286, 102): 2, (572, 204): 2}
    )


def test_make_W_rejects_bad_degree():
    with pytest.raises(ValueError):
        make_W(heisenberg(1), 0)


def test_weights():
    assert weight(heisenberg(3)) == 8
    assert weight(free(2, 2)) == 4
    assert weight(lmn(1, 2)) == 7
    assert weight(maxclass(3)) == 7
    assert (weight(f4()), weight(q5()), weight(bk())) == (15, 9, 102)
    with pytest.raises(UnsupportedFamilyError):
        weight(abelian(2))


def test_abscissa_values():
    assert abscissa(abelian(5), 1) == 5
    assert abscissa(free(2, 2), 1) == 2
    assert abscissa(heisenberg(2), 1) == Fraction(8, 3)
    assert abscissa(lmn(1, 2), 1) == 3
    assert all(abscissa(maxclass(c), 1) == 2 for c in (2, 3, 4, 5))
    assert abscissa(maxclass(3), 2) == Fraction(11, 4)
    assert abscissa(f4(), 2) == Fraction(37, 15)
    assert abscissa(q5(), 1) == Fraction(7, 3)
    assert abscissa(bk(), 1) == Fraction(287, 102)


def test_abscissa_refuses_formal_lmn():
    with pytest.raises(ValueError, match="abscissa undefined"):
        abscissa(lmn(4, 2), 1)


def test_abscissa_rejects_bad_degree():
    with pytest.raises(ValueError):
        abscissa(q5(), 0)
