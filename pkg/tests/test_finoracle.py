import pytest

from krlie.errors import MalformedTable
from krlie.finoracle import (Cyclotomic, builtin, cyclic, cyclotomic_poly, direct_product, fs_indicator,
                             parse_table, quaternion8, real_quat_tables, trivial_group, validate)

CORPUS = ["Q8", "C2", "C3", "C4", "Q8xC3", "V4", "C5xC2", "trivial"]


@pytest.mark.parametrize("name", CORPUS)
def test_tables_are_valid(name):
    t = builtin(name)
    validate(t)
    assert sum(d * d for d in t.dims()) == t.order


@pytest.mark.parametrize("name", CORPUS)
def test_rank_equalities(name):
    r = real_quat_tables(builtin(name))
    n_r, n_c, n_h = r["R"]
    assert r["RR"] == (n_r, n_c // 2, n_h)
    assert r["RH"] == (n_h, n_c // 2, n_r)
    assert n_c % 2 == 0


@pytest.mark.parametrize("name", CORPUS)
def test_indicators_count_square_roots_of_one(name):
    # sum over irreducibles of indicator * dim = #{g : g^2 = 1}
    t = builtin(name)
    lhs = sum(fs_indicator(t, i) * d for i, d in enumerate(t.dims()))
    rhs = sum(size for size, sq in zip(t.sizes, t.squares) if sq == 0)
    assert lhs == rhs


@pytest.mark.parametrize("name", CORPUS)
def test_indicator_zero_iff_not_real_valued(name):
    t = builtin(name)
    for i, row in enumerate(t.chars):
        real_valued = all(x == x.conj() for x in row)
        assert (fs_indicator(t, i) != 0) == real_valued


def test_q8_indicators():
    t = quaternion8()
    assert [fs_indicator(t, i) for i in range(5)] == [1, 1, 1, 1, -1]


def test_q8xc3_ranks():
    r = real_quat_tables(builtin("Q8xC3"))
    assert r == {"R": (4, 10, 1), "RR": (4, 5, 1), "RH": (1, 5, 4)}
    assert builtin("Q8xC3").nclasses == 15


def test_c3_ranks():
    r = real_quat_tables(cyclic(3))
    assert r["R"] == (1, 2, 0) and r["RR"] == (1, 1, 0)
    # the real trivial character doubles to the single quaternionic-side generator
    assert r["RH"] == (0, 1, 1)


def test_trivial_group_ranks():
    assert real_quat_tables(trivial_group()) == {"R": (1, 0, 0), "RR": (1, 0, 0), "RH": (0, 0, 1)}


def test_product_with_trivial():
    t = direct_product(quaternion8(), trivial_group())
    assert real_quat_tables(t) == real_quat_tables(quaternion8())


def test_klein_four_linear():
    t = builtin("V4")
    assert t.dims() == [1, 1, 1, 1]


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)


def test_cyclotomic_reduction():
    z = Cyclotomic.root(3, 1)
    assert z + z * z + Cyclotomic.integer(3, 1) == 0
    assert (z * z * z).as_int() == 1


C3_TEXT = """
# cyclic group of order 3
order 3 exponent 3
1:0 1:2 1:1
1;1;1
1;z;z^2
1;z^2;z
"""


def test_parse_table_text():
    t = parse_table(C3_TEXT, "C3")
    assert real_quat_tables(t) == real_quat_tables(cyclic(3))


def test_parse_table_pairs_layout():
    text = "order 2\n1 0 1 0\n1;1\n1;-1\n"
    assert real_quat_tables(parse_table(text)) == {"R": (2, 0, 0), "RR": (2, 0, 0), "RH": (0, 0, 2)}


@pytest.mark.parametrize("text", [
    "",
    "order 3\n1:0 1:2 1:1\n1;1;1\n1;z;z^2\n",          # not square
    "order 3\n1:0 1:2 1:1\n1;1;1\n1;z;z^2\n1;z;z^2\n",  # fails orthogonality
    "order 4\n1:0 1:0\n1;1\n1;-1\n",                   # sizes do not sum to order
    "order 2\n1:0 1:5\n1;1\n1;-1\n",                   # bad square index
    "order 2\n1:0 1:0\n1;1\n1;q\n",                    # bad entry
    "size 2\n1:0 1:0\n1;1\n1;-1\n",                    # bad header
])
def test_malformed_tables(text):
    with pytest.raises(MalformedTable):
        parse_table(text)


def test_unknown_builtin():
    with pytest.raises(MalformedTable):
        builtin("S3")
