from hypothesis import given, settings, strategies as st

from krlie.charalg import fundamental_permutation
from krlie.omega import DifferentialForm, augment, conj_star, delta_G, sort_sign, wedge
from krlie.poly import Poly, parse_poly
from krlie.rootdata import parse_group

SU3 = parse_group("SU3")
SU4 = parse_group("SU4")


def polys(nvars, max_terms=4):
    mono = st.tuples(*[st.integers(0, 3)] * nvars)
    return st.dictionaries(mono, st.integers(-4, 4), max_size=max_terms).map(lambda d: Poly(nvars, d))


def test_poly_basics():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    p = (x + y) ** 2
    assert p == x * x + x * y * 2 + y * y
    assert p.diff(0) == x * 2 + y * 2
    assert p.evaluate([3, 7]) == 100
    assert p.permute((1, 0)) == p
    assert (p * 3).mod(2) == x * x + y * y
    assert p.degree() == 2


def test_poly_render():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    assert (x ** 3 - x * y * 2 - 1).render() == "[w1]^3 - 2*[w1]*[w2] - 1"
    assert Poly(2).render() == "0"
    assert (-x).render() == "-[w1]"


@settings(max_examples=200, deadline=None)
@given(polys(3))
def test_parse_poly_inverts_render(p):
    assert parse_poly(p.render(), 3) == p


@settings(max_examples=1000, deadline=None)
@given(polys(3), polys(3))
def test_delta_leibniz(p, q):
    assert delta_G(SU4, p * q) == delta_G(SU4, q) * p + delta_G(SU4, p) * q


def test_sort_sign():
    assert sort_sign([2, 0, 1]) == (1, (0, 1, 2))
    assert sort_sign([1, 0]) == (-1, (0, 1))
    assert sort_sign([1, 1]) == (0, None)


def test_wedge_anticommutes_on_one_forms():
    a = DifferentialForm.d(SU3, 0)
    b = DifferentialForm.d(SU3, 1)
    assert wedge(a, b) == -wedge(b, a)
    assert wedge(a, a) == DifferentialForm(SU3)


def test_bott_degree():
    f = DifferentialForm.d(SU3, 0, i=1)
    assert f.degrees() == {(-1 - 2) % 8}
    assert f.shift(4) == f


def test_conj_star_involution():
    perm = fundamental_permutation(SU3)
    assert perm == (1, 0)
    f = DifferentialForm(SU3, {((0,), 1): Poly.var(2, 1), ((0, 1), 0): Poly.const(2, 3)})
    g = conj_star(f)
    assert g.terms[((1,), 1)] == -Poly.var(2, 0)
    assert g.terms[((0, 1), 0)] == Poly.const(2, -3)
    assert conj_star(g) == f


def test_augment():
    f = DifferentialForm.d(SU3, 0, Poly.var(2, 0) * Poly.var(2, 1))
    assert augment(f) == DifferentialForm.d(SU3, 0, Poly.const(2, 9))


def test_render_styles():
    f = DifferentialForm(SU3, {((0, 1), 0): Poly.var(2, 0), ((1,), 2): Poly.const(2)})
    assert f.render() == "(1)·beta^2·d[w2] + ([w1])·d[w1]^d[w2]"
    assert f.render("expr") == "beta^2*dG(2) + ([w1])*dG(1)*dG(2)"
