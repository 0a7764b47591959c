"""Ground-truth enumeration: subring counts against the closed-form series."""

import pytest

from zetaforge import (
    LieLattice,
    abelian_lattice,
    count_proisomorphic,
    enumerate_sublattices,
    heisenberg,
    heisenberg_lattice,
    is_proisomorphic,
    is_subring,
    lattice_from_json,
    make_W,
    maxclass,
)
from zetaforge.laurent import ResourceGuardError
from zetaforge.oracle import lattice_from_dict

H1 = heisenberg_lattice(1)
H2 = heisenberg_lattice(2)
# class-3 filiform: [e1, e2] = e3, [e1, e3] = e4
M3 = lattice_from_dict({
    "rank": 4,
    "brackets": [[1, 2, [0, 0, 1, 0]], [1, 3, [0, 0, 0, 1]]],
})


def test_tensor_validation():
    with pytest.raises(ValueError, match="antisymmetric"):
        LieLattice(2, (((0, 0), (1, 0)), ((1, 0), (0, 0))))
    with pytest.raises(ValueError, match="Jacobi"):
        lattice_from_dict(
            {"rank": 3, "brackets": [[1, 2, [0, 0, 1]], [2, 3, [0, 1, 0]]]}
        )
    with pytest.raises(ValueError, match="rank x rank"):
        LieLattice(2, (((0, 0),),))


def test_bracket_dict_validation():
    with pytest.raises(ValueError, match="indices"):
        lattice_from_dict({"rank": 3, "brackets": [[2, 2, [0, 0, 1]]]})
    with pytest.raises(ValueError, match="indices"):
        lattice_from_dict({"rank": 3, "brackets": [[1, 4, [0, 0, 1]]]})
    with pytest.raises(ValueError, match="duplicate"):
        lattice_from_dict(
            {"rank": 3, "brackets": [[1, 2, [0, 0, 1]], [1, 2, [0, 0, 2]]]}
        )
    with pytest.raises(ValueError, match="length rank"):
        lattice_from_dict({"rank": 3, "brackets": [[1, 2, [0, 1]]]})


def test_constructors_and_recognition():
    assert abelian_lattice(3).is_abelian()
    assert not H1.is_abelian()
    assert H1.heisenberg_m() == 1
    assert H2.heisenberg_m() == 2
    assert M3.heisenberg_m() is None
    assert H1.bracket((1, 0, 0), (0, 1, 0)) == [0, 0, 1]
    assert H1.bracket((0, 1, 0), (1, 0, 0)) == [0, 0, -1]


def test_lattice_from_json_round_trip():
    lat = lattice_from_json(
        '{"rank": 3, "brackets": [[1, 2, [0, 0, 1]]]}'
    )
    assert lat == H1


def test_enumeration_counts_match_gaussian_binomials():
    # sublattices of Z^3 of index 2^k, counted by C(k+2, k)_2
    assert sum(1 for _ in enumerate_sublattices(3, 2, 0)) == 1
    assert sum(1 for _ in enumerate_sublattices(3, 2, 1)) == 7
    assert sum(1 for _ in enumerate_sublattices(3, 2, 2)) == 35
    assert sum(1 for _ in enumerate_sublattices(2, 3, 2)) == 13


def test_enumeration_yields_distinct_hnf_bases():
    seen = set(enumerate_sublattices(3, 2, 2))
    assert len(seen) == 35
    for basis in seen:
        assert all(basis[i][j] == 0 for i in range(3) for j in range(i))
        assert basis[0][0] * basis[1][1] * basis[2][2] == 4


def test_enumeration_guards():
    with pytest.raises(ResourceGuardError):
        list(enumerate_sublattices(7, 2, 1))
    with pytest.raises(ResourceGuardError):
        list(enumerate_sublattices(3, 7, 1))
    with pytest.raises(ResourceGuardError):
        list(enumerate_sublattices(3, 2, 5))
    with pytest.raises(ValueError):
        list(enumerate_sublattices(3, 2, -1))


def test_is_subring():
    assert is_subring(H1, ((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert not is_subring(H1, ((1, 0, 0), (0, 1, 0), (0, 0, 2)))
    assert is_subring(abelian_lattice(2), ((4, 1), (0, 2)))


def test_heisenberg_verdicts_by_hand():
    # index p: the derived subring shrinks but the center does not
    assert not is_proisomorphic(H1, ((2, 0, 0), (0, 1, 0), (0, 0, 1)), 2)
    # index p^2 with both shrunk in step: still the full Heisenberg shape
    assert is_proisomorphic(H1, ((2, 0, 0), (0, 1, 0), (0, 0, 2)), 2)
    assert is_proisomorphic(H1, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), 5)


def test_abelian_counts_are_all_sublattices():
    assert [count_proisomorphic(abelian_lattice(3), 2, k) for k in range(3)] == [
        1, 7, 35,
    ]


def test_heisenberg_counts_match_series():
    w = make_W(heisenberg(1), 1)
    series = w.expand_series(2, 4)
    counts = [count_proisomorphic(H1, 2, k) for k in range(5)]
    assert counts == [series[k] for k in range(5)]
    assert counts == [1, 0, 12, 0, 112]
    assert count_proisomorphic(H1, 3, 2) == 36


def test_second_heisenberg_count():
    w = make_W(heisenberg(2), 1)
    series = w.expand_series(2, 3)
    assert series[3] == 240
    assert count_proisomorphic(H2, 2, 3) == 240


def test_generic_rank4_counts_match_series():
    w = make_W(maxclass(3), 1)
    series = w.expand_series(2, 3)
    counts = [count_proisomorphic(M3, 2, k) for k in range(4)]
    assert counts == [series[k] for k in range(4)]
    assert counts == [1, 0, 0, 32]


def test_generic_rank_guard():
    # rank 5, neither abelian nor a standard Heisenberg tensor
    lat = lattice_from_dict(
        {"rank": 5, "brackets": [[1, 2, [0, 0, 0, 1, 0]], [1, 3, [0, 0, 0, 0, 1]]]}
    )
    basis = tuple(tuple(2 if i == j == 0 else (i == j) for j in range(5)) for i in range(5))
    with pytest.raises(ValueError, match="no exact criterion"):
        is_proisomorphic(lat, basis, 2)
