"""KR*_G(G) in normal form.

Elements are sums of

* a free part: square-free generator monomials times :class:`CoeffElement`
  coefficients.  Generators are ``dR(a)`` (real-type fundamental ``a``,
  degree -1), ``dH(a)`` (quaternionic-type fundamental ``a``, degree -5) and
  ``lam k`` (conjugate pair ``k`` of complex-type fundamentals, degree 0);
* an r part: realifications ``r(x)`` of forms ``x`` in Omega (x) K*(+)
  whose wedge monomial contains an unpaired complex-type differential.  One
  representative is stored per ``sigma-bar*`` orbit.

Multiplication rewrites products with the square relations for ``dR``,
``dH`` and ``lam``, the coefficient-ring relations and the r/c identities
``z r(x) = r(c(z) x)`` and ``r(x) r(y) = r(x (y + sigma-bar* y))``.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .charalg import (RepType, exterior_power, fundamental_permutation, irrep_character,
                      poly_in_fundamentals)
from .coeff import (CoeffElement, CRep, _join, coefficient_from_rep, complexify, eta, realify,
                    rep_poly, rep_type, is_canonical)
from .errors import MixedGroup, UnsupportedGroup, WrongSpec
from .omega import DifferentialForm, augment, sort_sign, wedge
from .poly import Poly
from .rootdata import Family, Involution

DR, DH, LAM = 0, 1, 2
GEN_DEGREE = {DR: 7, DH: 3, LAM: 0}


def degree_label(d: int) -> int:
    """Degree mod 8 reported in ``-7..0``."""
    return -((-d) % 8)


@dataclass(frozen=True)
class GeneratorData:
    spec: object
    types: tuple        # RepType per fundamental
    real: tuple         # fundamental indices of real type
    quat: tuple         # fundamental indices of quaternionic type
    pairs: tuple        # (canonical index, partner index) per conjugate pair
    perm: tuple         # fundamental permutation induced by sigma-bar*

    @property
    def symbols(self):
        return tuple([(DR, a) for a in self.real] + [(DH, a) for a in self.quat]
                     + [(LAM, k) for k in range(len(self.pairs))])

    def pair_index(self, a):
        for k, (g, s) in enumerate(self.pairs):
            if a in (g, s):
                return k
        return None


@lru_cache(maxsize=None)
def generator_data(spec) -> GeneratorData:
    if spec.family in (Family.TORUS, Family.FINITE):
        raise UnsupportedGroup(f"{spec} has no fundamental representations")
    funds = spec.fundamentals
    types = tuple(rep_type(spec, w) for w in funds)
    perm = fundamental_permutation(spec)
    real = tuple(a for a, t in enumerate(types) if t is RepType.R)
    quat = tuple(a for a, t in enumerate(types) if t is RepType.H)
    pairs = tuple((a, perm[a]) for a, t in enumerate(types)
                  if t is RepType.C and is_canonical(spec, funds[a]))
    return GeneratorData(spec, types, real, quat, pairs, perm)


def gen_name(g) -> str:
    kind, a = g
    return {DR: f"dR({a + 1})", DH: f"dH({a + 1})", LAM: f"lam{a + 1}"}[kind]


def mono_name(mono) -> str:
    return "*".join(gen_name(g) for g in mono)


def mono_degree(mono) -> int:
    return sum(GEN_DEGREE[g[0]] for g in mono) % 8


def _odd(g) -> bool:
    return g[0] != LAM


class KRGElement:
    __slots__ = ("spec", "free", "rpart")

    def __init__(self, spec, free=None, rpart=None):
        self.spec = spec
        self.free = {m: y for m, y in (free or {}).items() if y}
        self.rpart = {k: c for k, c in (rpart or {}).items() if c}

    @classmethod
    def zero(cls, spec):
        return cls(spec)

    @classmethod
    def coefficient(cls, y: CoeffElement, mono=()):
        return cls(y.spec, {tuple(mono): y})

    @classmethod
    def generator(cls, spec, g):
        return cls(spec, {(g,): CoeffElement.scalar(spec)})

    def __bool__(self):
        return bool(self.free or self.rpart)

    def __eq__(self, other):
        if isinstance(other, int):
            other = KRGElement.coefficient(CoeffElement.scalar(self.spec, other))
        return (isinstance(other, KRGElement) and self.spec == other.spec
                and self.free == other.free and self.rpart == other.rpart)

    def __hash__(self):
        return hash((frozenset(self.free.items()), frozenset(self.rpart.items())))

    def _check(self, other):
        if self.spec != other.spec:
            raise MixedGroup(f"cannot combine elements of {self.spec} and {other.spec}")

    def __add__(self, other):
        if isinstance(other, int):
            other = KRGElement.coefficient(CoeffElement.scalar(self.spec, other))
        self._check(other)
        free = dict(self.free)
        for m, y in other.free.items():
            free[m] = free[m] + y if m in free else y
        rpart = dict(self.rpart)
        for k, c in other.rpart.items():
            rpart[k] = rpart.get(k, 0) + c
        return KRGElement(self.spec, free, rpart)

    __radd__ = __add__

    def __neg__(self):
        return KRGElement(self.spec, {m: -y for m, y in self.free.items()},
                          {k: -c for k, c in self.rpart.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return KRGElement(self.spec, {m: y * other for m, y in self.free.items()},
                              {k: c * other for k, c in self.rpart.items()})
        if isinstance(other, CoeffElement):
            other = KRGElement.coefficient(other)
        return kr_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, CoeffElement):
            return kr_mul(KRGElement.coefficient(other), self)
        return NotImplemented

    def r_form(self) -> DifferentialForm:
        """The stored r part as a form ``x`` with ``r(x)`` equal to it."""
        nf = len(self.spec.fundamentals)
        terms = defaultdict(lambda: Poly(nf))
        for (exps, mono, i), c in self.rpart.items():
            terms[(mono, i)] = terms[(mono, i)] + Poly(nf, {exps: c})
        return DifferentialForm(self.spec, dict(terms))

    def degrees(self) -> set:
        out = set()
        for m, y in self.free.items():
            for d in y.degrees():
                out.add((d + mono_degree(m)) % 8)
        for (_, mono, i) in self.rpart:
            out.add((-len(mono) - 2 * i) % 8)
        return out

    def homogeneous_parts(self) -> dict:
        out = defaultdict(lambda: KRGElement(self.spec))
        for m, y in self.free.items():
            for d, part in y.homogeneous_parts().items():
                out[(d + mono_degree(m)) % 8] += KRGElement(self.spec, {m: part})
        for k, c in self.rpart.items():
            out[(-len(k[1]) - 2 * k[2]) % 8] += KRGElement(self.spec, rpart={k: c})
        return dict(out)

    def render(self) -> str:
        parts = []
        for m in sorted(self.free, key=lambda m: (len(m), m)):
            terms = self.free[m].render_terms()
            if not m:
                parts.extend(terms)
                continue
            ms = mono_name(m)
            if len(terms) == 1:
                sign, body = terms[0]
                parts.append((sign, ms if body == "1" else f"{body}*{ms}"))
            else:
                parts.append(("+", f"({_join(terms)})*{ms}"))
        rf = self.r_form()
        for (mono, i) in sorted(rf.terms, key=lambda k: (len(k[0]), k[0], k[1])):
            p = rf.terms[(mono, i)]
            sign = "+"
            if len(p.terms) == 1 and next(iter(p.terms.values())) < 0:
                p, sign = -p, "-"
            factors = []
            ptxt = p.render()
            if ptxt != "1":
                factors.append(f"({ptxt})" if len(p.terms) > 1 else ptxt)
            if i:
                factors.append("beta" if i == 1 else f"beta^{i}")
            factors.extend(f"dG({a + 1})" for a in mono)
            parts.append((sign, "r(" + "*".join(factors) + ")"))
        return _join(parts)

    def __repr__(self):
        return f"KRGElement({self.render()})"


# ---------------------------------------------------------------- complexification

def crep_to_form(x: CRep) -> DifferentialForm:
    spec = x.spec
    return DifferentialForm(spec, {((), i): rep_poly(spec, x.beta_part(i)) for i in range(4)})


def coeff_to_form(y: CoeffElement) -> DifferentialForm:
    return crep_to_form(complexify(y))


@lru_cache(maxsize=None)
def complexify_generator(spec, g) -> DifferentialForm:
    kind, a = g
    if kind == DR:
        return DifferentialForm.d(spec, a)
    if kind == DH:
        return DifferentialForm.d(spec, a, i=2)
    gp, sp = generator_data(spec).pairs[a]
    return wedge(DifferentialForm.d(spec, gp, i=3), DifferentialForm.d(spec, sp))


@lru_cache(maxsize=None)
def complexify_mono(spec, mono) -> DifferentialForm:
    out = DifferentialForm.scalar(spec, 1)
    for g in mono:
        out = wedge(out, complexify_generator(spec, g))
    return out


def complexify_krg(a: KRGElement) -> DifferentialForm:
    spec = a.spec
    out = DifferentialForm(spec)
    for m, y in a.free.items():
        out = out + wedge(coeff_to_form(y), complexify_mono(spec, m))
    x = a.r_form()
    if x:
        out = out + x + conj_star_form(x)
    return out


def conj_star_form(x: DifferentialForm) -> DifferentialForm:
    from .omega import conj_star
    return conj_star(x)


# ---------------------------------------------------------------- realification

def realify_form(x: DifferentialForm) -> KRGElement:
    """``r(x)`` in normal form: foldable terms go to the free part."""
    spec = x.spec
    gd = generator_data(spec)
    free = defaultdict(lambda: CoeffElement(spec))
    rpart = defaultdict(int)
    for (mono, i), p in x.terms.items():
        present = set(mono)
        unpaired = []
        for k, (gp, sp) in enumerate(gd.pairs):
            if (gp in present) != (sp in present):
                unpaired.append((k, gp in present))
        if unpaired:
            if not unpaired[0][1]:
                # move to the representative whose first unpaired symbol is canonical
                sign, mono = sort_sign([gd.perm[a] for a in mono])
                p = p.permute(gd.perm) * (sign * (-1) ** i)
            for exps, c in p.terms.items():
                rpart[(exps, mono, i % 4)] += c
            continue
        order = [a for a in gd.real if a in present] + [a for a in gd.quat if a in present]
        gens = [(DR, a) for a in gd.real if a in present] + [(DH, a) for a in gd.quat if a in present]
        h = sum(1 for a in gd.quat if a in present)
        n_pairs = 0
        for k, (gp, sp) in enumerate(gd.pairs):
            if gp in present:
                order += [gp, sp]
                gens.append((LAM, k))
                n_pairs += 1
        eps, _ = sort_sign(order)
        coef = realify(CRep.from_poly(spec, p, i - 2 * h - 3 * n_pairs)) * eps
        key = tuple(sorted(gens))
        free[key] = free[key] + coef
    return KRGElement(spec, dict(free), dict(rpart))


# ---------------------------------------------------------------- lifts and squares

def lift_delta(spec, p: Poly, degree: int = 0) -> KRGElement:
    """``delta_R`` (degree-0 class) or ``delta_H`` (degree -4 class) of the Real class ``p``.

    ``p`` is a polynomial in the fundamentals.  Real-type fundamentals
    contribute ``coefficient * dR``, quaternionic ones ``coefficient * dH``
    and each conjugate pair ``r(dp/d gamma * d gamma * beta^k)``.
    """
    gd = generator_data(spec)
    d = degree % 8
    out = KRGElement(spec)
    for a in gd.real:
        dp = p.diff(a)
        if dp:
            out = out + KRGElement(spec, {((DR, a),): coefficient_from_rep(spec, dp, d)})
    for a in gd.quat:
        dp = p.diff(a)
        if dp:
            out = out + KRGElement(spec, {((DH, a),): coefficient_from_rep(spec, dp, d + 4)})
    for gp, _ in gd.pairs:
        dp = p.diff(gp)
        if dp:
            out = out + realify_form(DifferentialForm.d(spec, gp, dp, i=(-d // 2) % 4))
    return out


def fundamental_poly(spec, a) -> Poly:
    return Poly.var(len(spec.fundamentals), a)


@lru_cache(maxsize=None)
def wedge2_poly(spec, a) -> Poly:
    chi = irrep_character(spec, spec.fundamentals[a])
    return poly_in_fundamentals(spec, exterior_power(2, chi))


@lru_cache(maxsize=None)
def generator_square(spec, g) -> KRGElement:
    """Right-hand side of the square relation for a generator."""
    kind, a = g
    if kind == LAM:
        return KRGElement(spec)
    w = spec.fundamentals[a]
    sym = CoeffElement.symbol(spec, w)
    lifted = lift_delta(spec, wedge2_poly(spec, a), 0)
    inner = KRGElement(spec, {(g,): sym}) - lifted
    return scale_coeff(eta(spec), inner)


def scale_coeff(y: CoeffElement, a: KRGElement) -> KRGElement:
    """``y * a`` for a coefficient ``y``."""
    spec = a.spec
    out = KRGElement(spec, {m: y * z for m, z in a.free.items()})
    x = a.r_form()
    if x:
        out = out + realify_form(wedge(coeff_to_form(y), x))
    return out


def _merge_sign(m1, m2):
    """Sign of sorting ``m1 + m2`` (disjoint, odd generators anticommute)."""
    sign = 1
    for g in m1:
        if _odd(g):
            for h in m2:
                if _odd(h) and h < g:
                    sign = -sign
    return sign


@lru_cache(maxsize=None)
def mono_mul(spec, m1: tuple, m2: tuple) -> KRGElement:
    one = CoeffElement.scalar(spec)
    common = sorted(set(m1) & set(m2))
    if not common:
        return KRGElement(spec, {tuple(sorted(m1 + m2)): one * _merge_sign(m1, m2)})
    g = common[0]
    i1, i2 = m1.index(g), m2.index(g)
    a, b = m1[:i1], m1[i1 + 1:]
    c, d = m2[:i2], m2[i2 + 1:]
    # a g b c g d = sign * a (g g) b c d
    sign = 1
    if _odd(g):
        moved = sum(1 for h in b + c if _odd(h))
        sign = (-1) ** moved
    sq = generator_square(spec, g)
    left = KRGElement(spec, {a: one}) * sq if sq else sq
    if not left:
        return KRGElement(spec)
    rest = KRGElement(spec, {b: one})
    rest = rest * KRGElement(spec, {c: one})
    rest = rest * KRGElement(spec, {d: one})
    return (left * rest) * sign


def kr_mul(a: KRGElement, b: KRGElement) -> KRGElement:
    a._check(b)
    spec = a.spec
    out = KRGElement(spec)
    for m1, y1 in a.free.items():
        for m2, y2 in b.free.items():
            y = y1 * y2
            if not y:
                continue
            mm = mono_mul(spec, m1, m2)
            out = out + (scale_coeff(y, mm) if y != 1 else mm)
    xa, xb = a.r_form(), b.r_form()
    form = DifferentialForm(spec)
    if xb:
        for m1, y1 in a.free.items():
            form = form + wedge(wedge(coeff_to_form(y1), complexify_mono(spec, m1)), xb)
    if xa:
        for m2, y2 in b.free.items():
            form = form + wedge(xa, wedge(coeff_to_form(y2), complexify_mono(spec, m2)))
        if xb:
            form = form + wedge(xa, xb + conj_star_form(xb))
    if form:
        out = out + realify_form(form)
    return out


# ---------------------------------------------------------------- forgetful map

def forget_coeff(y: CoeffElement) -> CoeffElement:
    """Augmentation of a coefficient to KR*(pt) (trivial-representation keys)."""
    spec = y.spec
    z = spec.zero
    out = defaultdict(int)
    for k, c in y.terms.items():
        if k[0] == "r":
            dim = irrep_character(spec, k[1]).dim
            for kk, cc in realify(CRep.irrep(spec, z, k[2])).terms.items():
                out[kk] += cc * c * dim
            continue
        b, hw = k[1], k[2]
        dim = irrep_character(spec, hw).dim
        if rep_type(spec, hw) is RepType.H:
            # W has degree -4 and forgets to (dim W / 2) mu
            if b == "1":
                out[("F", "mu", z)] += c * dim // 2
            elif b == "mu":
                out[("F", "1", z)] += 2 * c * dim
        else:
            out[("F", b, z)] += c * dim
    return CoeffElement(spec, out)


def forget_to_kr(a: KRGElement) -> KRGElement:
    """Image in nonequivariant KR*(G), kept in the same normal form with
    trivial-representation coefficients only."""
    spec = a.spec
    out = KRGElement(spec, {m: forget_coeff(y) for m, y in a.free.items()})
    x = a.r_form()
    if x:
        out = out + realify_form(augment(x))
    return out


def nonequivariant_mul(a: KRGElement, b: KRGElement) -> KRGElement:
    """Product in KR*(G) of elements with trivial-representation coefficients."""
    return forget_to_kr(kr_mul(a, b))


# ---------------------------------------------------------------- torus ring

class TorusElement:
    """Element of KR*_T(T) for ``(T, complex conjugation)``.

    Keys are ``(mono, weight, b)``: a strictly increasing tuple of torus
    coordinates (the product of ``dR(e_i)``), a Laurent monomial and a
    KR*(pt) basis element.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        out = defaultdict(int)
        for k, c in (terms or {}).items():
            out[k] += c
        clean = {}
        for k, c in out.items():
            if k[2] in ("eta", "eta2"):
                c %= 2
            if c:
                clean[k] = c
        self.terms = clean

    def __eq__(self, other):
        return isinstance(other, TorusElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TorusElement(self.n, out)

    def __neg__(self):
        return TorusElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        from .coeff import pt_mul
        if isinstance(other, int):
            return TorusElement(self.n, {k: c * other for k, c in self.terms.items()})
        out = defaultdict(int)
        for (m1, w1, b1), c1 in self.terms.items():
            for (m2, w2, b2), c2 in other.terms.items():
                prod = pt_mul(b1, b2)
                if not prod:
                    continue
                scal, b = prod
                mono, sign = list(m1), 1
                for g in m2:
                    if g in mono:
                        # g^2 = eta g after moving past the larger entries
                        sign *= (-1) ** sum(1 for h in mono if h > g)
                        p2 = pt_mul(b, "eta")
                        if not p2:
                            sign = 0
                            break
                        scal *= p2[0]
                        b = p2[1]
                    else:
                        sign *= (-1) ** sum(1 for h in mono if h > g)
                        mono.append(g)
                        mono.sort()
                if not sign:
                    continue
                w = tuple(x + y for x, y in zip(w1, w2))
                out[(tuple(mono), w, b)] += c1 * c2 * scal * sign
        return TorusElement(self.n, out)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (m, w, b), c in sorted(self.terms.items()):
            factors = [] if c == 1 else [str(c)]
            if b != "1":
                factors.append({"eta": "eta", "eta2": "eta^2", "mu": "mu"}[b])
            factors += [f"e{i + 1}^{x}" if x != 1 else f"e{i + 1}" for i, x in enumerate(w) if x]
            factors += [f"dR(e{i + 1})" for i in m]
            parts.append("*".join(factors) or "1")
        return " + ".join(parts)

    def __repr__(self):
        return f"TorusElement({self.render()})"


def _require_unitary_conj(spec):
    if spec.family is not Family.UNITARY or spec.involution is not Involution.CONJ:
        raise WrongSpec(f"torus restriction is implemented for U(n) with complex conjugation, not {spec}")


def torus_coefficient(spec, y: CoeffElement) -> TorusElement:
    n = spec.rank
    out = defaultdict(int)
    for k, c in y.terms.items():
        if k[0] != "F":
            raise WrongSpec("unexpected complex-type coefficient under complex conjugation")
        for w, m in irrep_character(spec, k[2]).mult.items():
            out[((), w, k[1])] += m * c
    return TorusElement(n, out)


@lru_cache(maxsize=None)
def torus_generator(spec, g) -> TorusElement:
    _require_unitary_conj(spec)
    kind, a = g
    n = spec.rank
    out = defaultdict(int)
    for w, m in irrep_character(spec, spec.fundamentals[a]).mult.items():
        for i, x in enumerate(w):
            if x:
                out[((i,), w, "1")] += m * x
    return TorusElement(n, out)


def restrict_to_torus(spec, a: KRGElement) -> TorusElement:
    _require_unitary_conj(spec)
    if a.spec != spec:
        raise WrongSpec("element belongs to a different group")
    n = spec.rank
    out = TorusElement(n)
    for m, y in a.free.items():
        t = torus_coefficient(spec, y)
        for g in m:
            t = t * torus_generator(spec, g)
        out = out + t
    if a.rpart:
        raise WrongSpec("r part is empty under complex conjugation")
    return out


def torus_delta(n, i) -> TorusElement:
    return TorusElement(n, {((i,), (0,) * n, "1"): 1})


def torus_character(n, w, b="1", c=1) -> TorusElement:
    return TorusElement(n, {((), tuple(w), b): c})


# ---------------------------------------------------------------- presentation

def coefficient_ring_summary(spec) -> dict:
    gd = generator_data(spec)
    names = [f"[w{a + 1}]" for a in range(len(spec.fundamentals))]
    return {
        "base": "KR*(pt) = Z[eta, mu]/(2*eta, eta^3, mu*eta, mu^2 - 4)",
        "real_type_fundamentals": [names[a] for a in gd.real],
        "quaternionic_type_fundamentals": [names[a] for a in gd.quat],
        "complex_pairs": [[names[g], names[s]] for g, s in gd.pairs],
        "degrees": {"eta": -1, "mu": -4, "beta": -2, "quaternionic_symbol": -4},
        "r_relations": ["eta*r(x) = 0", "mu*r(x*beta^i) = 2*r(x*beta^(i+2))",
                        "r(sigma(x)*beta^i) = (-1)^i*r(x*beta^i)"],
    }


def present_ring(spec) -> dict:
    if spec.family in (Family.TORUS, Family.FINITE):
        raise UnsupportedGroup(f"no Lie-group presentation for {spec}")
    gd = generator_data(spec)
    gens = [{"name": gen_name(g), "degree": degree_label(GEN_DEGREE[g[0]])} for g in gd.symbols]
    relations = []
    for g in gd.symbols:
        sq = kr_mul(KRGElement.generator(spec, g), KRGElement.generator(spec, g))
        relations.append(f"{gen_name(g)}^2 = {sq.render()}")
    if gd.pairs:
        relations += [
            "eta*r(x) = 0 for every r-class",
            "mu*r(x*beta^i) = 2*r(x*beta^(i+2))",
            "r(x)*r(y) = r(x*(y + sigma(y))), sigma(beta) = -beta",
        ]
    return {
        "group": str(spec).split("[")[0],
        "involution": spec.involution.value,
        "generators": gens,
        "relations": relations,
        "coefficient_ring": coefficient_ring_summary(spec),
    }


def all_generator_pairs(spec):
    syms = generator_data(spec).symbols
    return list(itertools.combinations_with_replacement(syms, 2))
