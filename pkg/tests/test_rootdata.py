import itertools
from math import factorial

import pytest

from krlie.charalg import conj_dual, exterior_power, irrep_character
from krlie.errors import InvalidGroup, OddRankSymplectic, ParseError
from krlie.rootdata import Family, Involution, build_group, involution_weight_map, parse_group, weyl_orbit


def test_build_unitary_conj():
    s = build_group(Family.UNITARY, 3, Involution.CONJ)
    assert s.rank == 3 and len(s.fundamentals) == 3


def test_odd_rank_symplectic_rejected():
    with pytest.raises(OddRankSymplectic):
        build_group("U", 3, "symp")


@pytest.mark.parametrize("args", [("G2", 2, "conj"), ("Sp", 2, "conj"), ("SU", 1, "trivial"), ("Sp", 2, "symp")])
def test_invalid_combinations(args):
    with pytest.raises(InvalidGroup):
        build_group(*args)


@pytest.mark.parametrize("token,order", [("U3", 6), ("U4", 24), ("SU3", 6), ("C1", 2), ("C2", 8),
                                         ("C3", 48), ("Sp4", 8), ("G2", 12)])
def test_weyl_order(token, order):
    assert parse_group(token).weyl_order == order


def test_unitary_fundamentals_are_exterior_powers():
    s = parse_group("U4")
    assert s.fundamentals == ((1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1))


def test_sp_token_uses_symplectic_rank():
    assert parse_group("Sp4") == parse_group("C2")
    with pytest.raises(InvalidGroup):
        parse_group("Sp3")


@pytest.mark.parametrize("token", ["X3", "U", "3U", "SU3x"])
def test_bad_tokens(token):
    with pytest.raises(ParseError):
        parse_group(token)


@pytest.mark.parametrize("token,inv", [("U3", "conj"), ("U4", "symp"), ("U2", "trivial"), ("G2", "trivial"),
                                       ("C2", "trivial"), ("SU3", "trivial"), ("T3", "conj"), ("T2", "trivial")])
def test_involution_squares_to_identity(token, inv):
    s = parse_group(token, inv)
    t = involution_weight_map(s)
    n = len(t)
    sq = tuple(tuple(sum(t[i][k] * t[k][j] for k in range(n)) for j in range(n)) for i in range(n))
    assert sq == tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@pytest.mark.parametrize("n,inv", [(2, "conj"), (3, "conj"), (4, "conj"), (2, "symp"), (4, "symp")])
def test_twisted_involutions_fix_exterior_powers(n, inv):
    s = parse_group(f"U{n}", inv)
    std = irrep_character(s, s.fundamentals[0])
    for k in range(1, n + 1):
        chi = exterior_power(k, std)
        assert conj_dual(s, chi) == chi


@pytest.mark.parametrize("token", ["U3", "SU3", "C2", "G2"])
def test_orbit_sizes_divide_weyl_order(token):
    s = parse_group(token)
    box = range(-2, 3)
    for w in itertools.product(box, repeat=s.dim):
        assert s.weyl_order % len(weyl_orbit(s, w)) == 0


def test_unitary_weyl_order_is_factorial():
    for n in range(1, 6):
        assert parse_group(f"U{n}").weyl_order == factorial(n)


def test_dominant_with_sign_detects_walls():
    s = parse_group("U3")
    assert s.dominant_with_sign((1, 1, 0))[1] == 0
    assert s.dominant_with_sign((0, 1, 2)) == ((2, 1, 0), -1)
