"""Consistency checks for the KR*_G(G) engine.

``verify_suite(spec)`` returns a list of :class:`Check` records.  Every check
compares two independently computed normal forms: the product from the
rewrite system against a closed formula, a torus restriction, a
complexification or the nonequivariant image.
"""
from __future__ import annotations

import itertools
import random
from typing import NamedTuple

from .charalg import exterior_power, irrep_character, poly_decomposition, poly_in_fundamentals
from .charalg import RepType
from .coeff import BASIS, CoeffElement, rep_type
from .errors import KRError, UnsupportedGroup
from .expr import poly_to_krg
from .krgring import (DH, DR, LAM, KRGElement, complexify_krg, forget_to_kr, gen_name,
                      generator_data, lift_delta, realify_form, restrict_to_torus,
                      torus_delta, wedge2_poly)
from .omega import DifferentialForm, wedge
from .poly import Poly
from .rootdata import Family, Involution, build_group


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _cmp(name, got, want) -> Check:
    if got == want:
        return Check(name, True)
    return Check(name, False, f"got {_show(got)}; expected {_show(want)}")


def _show(x):
    return x.render() if hasattr(x, "render") else repr(x)


def _coef(spec, basis="1"):
    return KRGElement.coefficient(CoeffElement.scalar(spec, 1, basis))


def _gen(spec, g):
    return KRGElement.generator(spec, g)


# ------------------------------------------------------------------ generic

def _generic_checks(spec):
    gd = generator_data(spec)
    out = []
    eta = _coef(spec, "eta")
    for g in gd.symbols:
        x = _gen(spec, g)
        sq = x * x
        name = gen_name(g)
        cx = complexify_krg(x)
        out.append(_cmp(f"c({name}^2) = c({name})^2", complexify_krg(sq), wedge(cx, cx)))
        if g[0] == LAM:
            out.append(_cmp(f"{name}^2 = 0", sq, KRGElement(spec)))
            continue
        bases = {k[1] for y in sq.free.values() for k in y.terms if k[0] == "F"}
        out.append(Check(f"{name}^2 is divisible by eta", bases <= {"eta", "eta2"} and not sq.rpart,
                         "" if bases <= {"eta", "eta2"} else f"got {sq.render()}"))
        # nonequivariant squares: the coefficient of the linear term becomes dim
        w = spec.fundamentals[g[1]]
        dim = irrep_character(spec, w).dim
        lifted = forget_to_kr(lift_delta(spec, wedge2_poly(spec, g[1]), 0))
        if g[0] == DR:
            want = eta * (x * dim - lifted)
        else:
            out.append(Check(f"dim of quaternionic [w{g[1] + 1}] is even", dim % 2 == 0, f"dim {dim}"))
            want = eta * lifted
        out.append(_cmp(f"forget({name}^2) nonequivariant square", forget_to_kr(sq), want))
    for g, h in itertools.combinations(gd.symbols, 2):
        x, y = _gen(spec, g), _gen(spec, h)
        out.append(_cmp(f"c({gen_name(g)}*{gen_name(h)}) = c*c", complexify_krg(x * y),
                        wedge(complexify_krg(x), complexify_krg(y))))
        sign = -1 if (g[0] != LAM and h[0] != LAM) else 1
        out.append(_cmp(f"{gen_name(g)}*{gen_name(h)} graded commutativity", x * y, (y * x) * sign))
    return out


# ------------------------------------------------------------------ U(n)

def _ext_poly(spec, j):
    nf = len(spec.fundamentals)
    if j == 0:
        return Poly.const(nf)
    if 1 <= j <= spec.rank:
        return Poly.var(nf, j - 1)
    return Poly(nf)


def _ext_gen(spec, j):
    """``dR`` or ``dH`` of the j-th exterior power, zero outside 1..n."""
    if not 1 <= j <= spec.rank:
        return KRGElement(spec)
    gd = generator_data(spec)
    kind = DR if (j - 1) in gd.real else DH
    return _gen(spec, (kind, j - 1))


def unitary_square_formula(spec, k):
    """Closed formula for the square of the generator on the k-th exterior power."""
    eta = _coef(spec, "eta")
    total = KRGElement(spec)
    if spec.involution is Involution.CONJ:
        for i in range(1, 2 * k + 1):
            total = total + poly_to_krg(spec, _ext_poly(spec, 2 * k - i)) * _ext_gen(spec, i)
        return eta * total
    if k % 2:
        kk = (k + 1) // 2   # k = 2kk - 1
        for j in range(1, 2 * kk):
            total = total + poly_to_krg(spec, _ext_poly(spec, 4 * kk - 2 * j - 1)) * _ext_gen(spec, 2 * j - 1)
            total = total + poly_to_krg(spec, _ext_poly(spec, 4 * kk - 2 * j - 2)) * _ext_gen(spec, 2 * j)
    else:
        kk = k // 2
        for j in range(1, 2 * kk + 1):
            total = total + poly_to_krg(spec, _ext_poly(spec, 4 * kk - 2 * j + 1)) * _ext_gen(spec, 2 * j - 1)
            total = total + poly_to_krg(spec, _ext_poly(spec, 4 * kk - 2 * j)) * _ext_gen(spec, 2 * j)
    return eta * total


def _unitary_checks(spec):
    out = []
    eta = _coef(spec, "eta")
    for k in range(1, spec.rank + 1):
        x = _ext_gen(spec, k)
        sq = x * x
        formula = unitary_square_formula(spec, k)
        out.append(_cmp(f"exterior-power square formula k={k}", sq, formula))
        if spec.involution is Involution.CONJ:
            tx = restrict_to_torus(spec, x)
            lhs = tx * tx
            rhs = eta * (poly_to_krg(spec, _ext_poly(spec, k)) * x - lift_delta(spec, wedge2_poly(spec, k - 1)))
            out.append(_cmp(f"torus: square relation for dR({k})", lhs, restrict_to_torus(spec, rhs)))
            out.append(_cmp(f"torus: exterior-power formula k={k}", lhs, restrict_to_torus(spec, formula)))
            out.append(_cmp(f"torus: rewrite-system square k={k}", lhs, restrict_to_torus(spec, sq)))
        else:
            cx = complexify_krg(x)
            out.append(_cmp(f"c(formula k={k}) = c(generator)^2", complexify_krg(formula), wedge(cx, cx)))
    if spec.involution is Involution.SYMP:
        gd = generator_data(spec)
        pattern = all((a in gd.real) == (a % 2 == 1) for a in range(spec.rank))
        out.append(Check("generators alternate dH, dR", pattern and len(gd.quat) + len(gd.real) == spec.rank))
    return out


# ------------------------------------------------------------------ Sp(2m)

def _sp_sigma(spec, j):
    """``sigma^j`` extended past m by the exterior-power difference it comes from."""
    m = spec.rank
    nf = len(spec.fundamentals)
    if j == 0:
        return Poly.const(nf), 1
    if 1 <= j <= m:
        return Poly.var(nf, j - 1), 1
    if m + 1 < j <= 2 * m + 2:
        p, s = _sp_sigma(spec, 2 * m + 2 - j)
        return p, -s
    return Poly(nf), 0


def _sp_gen(spec, j):
    m = spec.rank
    if 1 <= j <= m:
        return _gen(spec, (DR if j % 2 == 0 else DH, j - 1))
    if m + 1 < j <= 2 * m + 1:
        return -_sp_gen(spec, 2 * m + 2 - j)
    return KRGElement(spec)


def _sp_coef(spec, j):
    p, s = _sp_sigma(spec, j)
    if not s:
        return KRGElement(spec)
    return poly_to_krg(spec, p) * s


def symplectic_square_formula(spec, j):
    """Closed formula for the square of the generator on ``sigma^j``."""
    eta = _coef(spec, "eta")
    total = KRGElement(spec)
    if j % 2 == 0:
        k = j // 2
        for i in range(1, 2 * k + 1):
            total = total + _sp_coef(spec, 4 * k - 2 * i) * _sp_gen(spec, 2 * i)
            total = total + _sp_coef(spec, 4 * k - 2 * i + 1) * _sp_gen(spec, 2 * i - 1)
    else:
        k = (j + 1) // 2
        for i in range(1, 2 * k):
            total = total + _sp_coef(spec, 4 * k - 2 - 2 * i) * _sp_gen(spec, 2 * i)
            total = total + _sp_coef(spec, 4 * k - 1 - 2 * i) * _sp_gen(spec, 2 * i - 1)
    return eta * total


def _symplectic_checks(spec):
    out = []
    for j in range(1, spec.rank + 1):
        x = _sp_gen(spec, j)
        out.append(_cmp(f"sigma^{j} square formula", x * x, symplectic_square_formula(spec, j)))
    # the rank-one specialization of the formulas must reproduce SU(2)
    sp1 = spec if spec.rank == 1 else build_group(spec.family, 1)
    su2 = build_group("SU", 2, "trivial")
    y = _gen(su2, (DH, 0))
    x = _sp_gen(sp1, 1)
    got = symplectic_square_formula(sp1, 1).render()
    want = (y * y).render()
    out.append(Check("Sp(2) formula agrees with SU(2)", got == want, "" if got == want else f"{got} vs {want}"))
    direct = _coef(sp1, "eta") * poly_to_krg(sp1, Poly.var(1, 0)) * x
    out.append(_cmp("Sp(2): dH(1)^2 = eta*[w1]*dH(1)", x * x, direct))
    return out


# ------------------------------------------------------------------ G2

def _g2_checks(spec):
    out = []
    s1, s2 = spec.fundamentals
    p = Poly.var(2, 0)
    q = Poly.var(2, 1)
    e1 = poly_decomposition(spec, poly_in_fundamentals(spec, exterior_power(2, irrep_character(spec, s1))))
    out.append(Check("wedge^2 of the 7-dim = 7-dim + 14-dim", e1 == {s1: 1, s2: 1}, repr(e1)))
    e2 = poly_in_fundamentals(spec, exterior_power(2, irrep_character(spec, s2)))
    want2 = p ** 3 - p ** 2 - p * q * 2 - p
    out.append(_cmp("wedge^2 of the 14-dim as a polynomial", e2, want2))
    eta = _coef(spec, "eta")
    d1, d2 = _gen(spec, (DR, 0)), _gen(spec, (DR, 1))
    one = Poly.const(2)
    out.append(_cmp("dR(1)^2", d1 * d1, eta * (poly_to_krg(spec, p - one) * d1 + d2)))
    out.append(_cmp("dR(2)^2", d2 * d2, eta * (poly_to_krg(spec, p * p - one) * d1 + poly_to_krg(spec, q) * d2)))
    return out


# ------------------------------------------------------------------ r-classes

def r_generator_patterns(t):
    """``(eps, nu)`` 0/1 vectors indexing the additive generators of the r part."""
    for eps in itertools.product((0, 1), repeat=t):
        for nu in itertools.product((0, 1), repeat=t):
            if any(e and v for e, v in zip(eps, nu)) or 1 not in eps:
                continue
            k1 = nu.index(1) if 1 in nu else t
            if eps.index(1) < k1:
                yield eps, nu


def r_generator(spec, rho: Poly, i, eps, nu) -> KRGElement:
    gd = generator_data(spec)
    form = DifferentialForm.scalar(spec, rho, i)
    for k, (g, _) in enumerate(gd.pairs):
        if eps[k]:
            form = wedge(form, DifferentialForm.d(spec, g))
    for k, (_, s) in enumerate(gd.pairs):
        if nu[k]:
            form = wedge(form, DifferentialForm.d(spec, s))
    return realify_form(form)


def r_square_shape(spec, rho: Poly, i, eps, nu):
    """Expected square by degree: eta^2, +-mu, +-2 or 0 times rho*conj(rho) and a lam monomial."""
    gd = generator_data(spec)
    deg = (-2 * i - sum(eps) - sum(nu)) % 8
    lam = KRGElement.coefficient(CoeffElement.scalar(spec))
    for k in range(len(gd.pairs)):
        if eps[k] != nu[k]:
            lam = lam * _gen(spec, (LAM, k))
    base = poly_to_krg(spec, rho * rho.permute(gd.perm)) * lam
    if deg in (7, 3):
        return deg, [_coef(spec, "eta2") * base]
    if deg in (6, 2):
        m = _coef(spec, "mu") * base
        return deg, [m, -m]
    if deg in (0, 4) and any(eps[k] != nu[k] for k in range(len(gd.pairs))):
        # only reachable with two or more pairs: r(beta^even) = r(1) = 2
        return deg, [base * 2, base * -2]
    return deg, [KRGElement(spec)]


def _r_checks(spec):
    gd = generator_data(spec)
    t = len(gd.pairs)
    nf = len(spec.fundamentals)
    out = []
    rhos = [Poly.const(nf)] + [Poly.var(nf, a) for a in range(nf)]
    eta, mu = _coef(spec, "eta"), _coef(spec, "mu")
    for eps, nu in r_generator_patterns(t):
        for ri, rho in enumerate(rhos):
            for i in range(4):
                x = r_generator(spec, rho, i, eps, nu)
                label = f"r(rho{ri}*beta^{i}) eps={eps} nu={nu}"
                out.append(_cmp(f"eta*{label} = 0", eta * x, KRGElement(spec)))
                out.append(_cmp(f"mu*{label} = 2*shifted", mu * x, r_generator(spec, rho, i + 2, eps, nu) * 2))
                deg, allowed = r_square_shape(spec, rho, i, eps, nu)
                sq = x * x
                ok = sq in allowed
                out.append(Check(f"{label}^2 shape in degree {deg - 8 if deg else 0}", ok,
                                 "" if ok else f"got {sq.render()}; allowed {[a.render() for a in allowed]}"))
    return out


# ------------------------------------------------------------------ torus

def _torus_checks(spec):
    n = spec.rank
    out = []
    for i in range(n):
        d = torus_delta(n, i)
        eta = d.__class__(n, {((), (0,) * n, "eta"): 1})
        out.append(_cmp(f"delta(e{i + 1})^2 = eta*delta(e{i + 1})", d * d, eta * d))
    return out


# ------------------------------------------------------------------ sampling

def sample_weights(spec, level=2):
    """Highest weights that are sums of at most ``level`` fundamentals."""
    funds = spec.fundamentals
    out = {spec.zero}
    frontier = {spec.zero}
    for _ in range(level):
        frontier = {tuple(a + b for a, b in zip(w, f)) for w in frontier for f in funds}
        out |= frontier
    return sorted(out)


def random_coefficient(spec, rng, level=1) -> CoeffElement:
    hw = rng.choice(sample_weights(spec, level))
    c = rng.choice([-2, -1, 1, 2, 3])
    if rep_type(spec, hw) is RepType.C:
        return CoeffElement.r_term(spec, hw, rng.randrange(4), c)
    return CoeffElement.symbol(spec, hw, rng.choice(BASIS), c)


def random_form(spec, rng) -> DifferentialForm:
    nf = len(spec.fundamentals)
    exps = tuple(rng.randrange(2) for _ in range(nf))
    p = Poly(nf, {exps: rng.choice([-1, 1, 2])})
    mono = tuple(a for a in range(nf) if rng.random() < 0.4)
    return DifferentialForm(spec, {(mono, rng.randrange(4)): p})


def random_element(spec, rng, terms=2) -> KRGElement:
    """A few random free terms plus (when there are conjugate pairs) one r term."""
    syms = generator_data(spec).symbols
    out = KRGElement(spec)
    for _ in range(terms):
        mono = tuple(sorted(g for g in syms if rng.random() < 0.4))
        out = out + KRGElement(spec, {mono: random_coefficient(spec, rng)})
    if generator_data(spec).pairs and rng.random() < 0.7:
        out = out + realify_form(random_form(spec, rng))
    return out


def random_checks(spec, seed, samples=50):
    """Associativity, commutativity and c/forget multiplicativity on random triples."""
    rng = random.Random(seed)
    out = []
    bad = {"associativity": 0, "graded commutativity": 0, "complexification": 0, "forget": 0}
    for _ in range(samples):
        a, b, c = (random_element(spec, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad["associativity"] += 1
        for da, pa in a.homogeneous_parts().items():
            for db, pb in b.homogeneous_parts().items():
                odd = (da % 2) and (db % 2)
                if pa * pb != (pb * pa) * (-1 if odd else 1):
                    bad["graded commutativity"] += 1
        if complexify_krg(a * b) != wedge(complexify_krg(a), complexify_krg(b)):
            bad["complexification"] += 1
        if forget_to_kr(a * b) != forget_to_kr(forget_to_kr(a) * forget_to_kr(b)):
            bad["forget"] += 1
    for name, n in bad.items():
        out.append(Check(f"random {name} ({samples} samples, seed {seed})", n == 0,
                         f"{n} failures" if n else ""))
    return out


def verify_suite(spec) -> list:
    """Run every check that applies to ``spec``; failures are entries, not exceptions."""
    if spec.family is Family.FINITE:
        raise UnsupportedGroup("finite groups are checked with the finite command")
    if spec.family is Family.TORUS:
        return _torus_checks(spec)
    runs = [_generic_checks]
    if spec.family is Family.UNITARY and spec.involution is not Involution.TRIVIAL:
        runs.append(_unitary_checks)
    if spec.family is Family.SYMPLECTIC:
        runs.append(_symplectic_checks)
    if spec.family is Family.G2:
        runs.append(_g2_checks)
    if generator_data(spec).pairs:
        runs.append(_r_checks)
    out = []
    for run in runs:
        try:
            out.extend(run(spec))
        except KRError as e:
            out.append(Check(run.__name__.strip("_"), False, f"{type(e).__name__}: {e}"))
    return out
