"""Graded coefficient rings: KR*(pt), R(G) (x) K*(+) and KR*_G(pt).

A :class:`CoeffElement` is a finite integer combination of basis keys

* ``("F", b, hw)``: ``b`` in ``1, eta, eta2, mu`` times the irreducible
  ``hw`` of real or quaternionic type.  Quaternionic symbols sit in degree
  -4, so ``mu * W`` is the degree-0 class ``W + W``.  Coefficients of ``eta``
  and ``eta2`` are reduced mod 2.
* ``("r", hw, i)``: ``r(V(hw) beta^i)`` for ``hw`` the chosen member of a
  complex-type conjugate pair (the lexicographically larger highest weight).

A :class:`CRep` is an element of ``R(G) (x) K*(+)``: irreducible ``hw`` times
``beta^i`` with ``i`` mod 4.

Degrees are integers mod 8; ``-1`` for ``eta`` is stored as ``7``.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .charalg import RepType, classify_type, conj_hw, irrep_poly, poly_decomposition, tensor_irreps
from .errors import MixedGroup, NotReal
from .poly import Poly

BASIS = ("1", "eta", "eta2", "mu")
BASIS_DEGREE = {"1": 0, "eta": 7, "eta2": 6, "mu": 4}
BASIS_NAME = {"1": "", "eta": "eta", "eta2": "eta^2", "mu": "mu"}

# products in KR*(pt) = Z[eta, mu]/(2 eta, eta^3, mu eta, mu^2 - 4)
_PT_MUL = {
    ("1", "1"): (1, "1"), ("1", "eta"): (1, "eta"), ("1", "eta2"): (1, "eta2"),
    ("1", "mu"): (1, "mu"), ("eta", "eta"): (1, "eta2"), ("mu", "mu"): (4, "1"),
}


def pt_mul(b1: str, b2: str):
    """``(scalar, basis)`` with ``b1 * b2 = scalar * basis``, or None for zero."""
    return _PT_MUL.get((b1, b2)) or _PT_MUL.get((b2, b1))


@lru_cache(maxsize=None)
def rep_type(spec, hw) -> RepType:
    return classify_type(spec, hw)


def symbol_degree(spec, hw) -> int:
    return 4 if rep_type(spec, hw) is RepType.H else 0


def is_canonical(spec, hw) -> bool:
    return hw >= conj_hw(spec, hw)


def key_degree(spec, key) -> int:
    if key[0] == "F":
        return (BASIS_DEGREE[key[1]] + symbol_degree(spec, key[2])) % 8
    return (-2 * key[2]) % 8


def _check(a, b):
    if a.spec != b.spec:
        raise MixedGroup(f"cannot combine elements of {a.spec} and {b.spec}")


class CRep:
    """Element of ``R(G) (x) K*(+)``: ``(hw, i) -> int`` meaning ``V(hw) beta^i``."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms=None):
        self.spec = spec
        out = defaultdict(int)
        for (hw, i), c in (terms or {}).items():
            out[(hw, i % 4)] += c
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def irrep(cls, spec, hw, i=0, c=1):
        return cls(spec, {(hw, i): c})

    @classmethod
    def from_rep(cls, spec, rep: dict, i=0):
        return cls(spec, {(hw, i): m for hw, m in rep.items()})

    @classmethod
    def from_poly(cls, spec, p: Poly, i=0):
        return cls.from_rep(spec, poly_decomposition(spec, p), i)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CRep(self.spec, {(self.spec.zero, 0): other})
        return isinstance(other, CRep) and self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        _check(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CRep(self.spec, out)

    def __neg__(self):
        return CRep(self.spec, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CRep(self.spec, {k: c * other for k, c in self.terms.items()})
        _check(self, other)
        out = defaultdict(int)
        for (h1, i1), c1 in self.terms.items():
            for (h2, i2), c2 in other.terms.items():
                for hw, m in tensor_irreps(self.spec, h1, h2):
                    out[(hw, i1 + i2)] += c1 * c2 * m
        return CRep(self.spec, out)

    __rmul__ = __mul__

    def shift(self, j: int) -> "CRep":
        """Multiply by ``beta^j``."""
        return CRep(self.spec, {(hw, i + j): c for (hw, i), c in self.terms.items()})

    def conj_star(self) -> "CRep":
        """``sigma-bar*`` with ``beta -> -beta``."""
        return CRep(self.spec, {(conj_hw(self.spec, hw), i): c * (-1) ** i
                                for (hw, i), c in self.terms.items()})

    def beta_part(self, i: int) -> dict:
        return {hw: c for (hw, j), c in self.terms.items() if j == i % 4}

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i in range(4):
            rep = self.beta_part(i)
            if not rep:
                continue
            p = rep_poly(self.spec, rep)
            parts.extend(_scaled_terms(p, _beta_name(i)))
        return _join(parts)

    def __repr__(self):
        return f"CRep({self.render()})"


def _beta_name(i):
    return {0: "", 1: "beta", 2: "beta^2", 3: "beta^3"}[i % 4]


def rep_poly(spec, rep: dict) -> Poly:
    nf = len(spec.fundamentals)
    out = Poly(nf)
    for hw, m in rep.items():
        out = out + irrep_poly(spec, hw) * m
    return out


def _poly_terms(p: Poly):
    """``(sign, body)`` pairs of a rendered polynomial."""
    text = p.render()
    out = []
    for i, chunk in enumerate(text.split(" ")):
        if chunk in "+-" and i:
            sign = chunk
            continue
        if i == 0:
            if chunk.startswith("-"):
                out.append(("-", chunk[1:]))
            else:
                out.append(("+", chunk))
        else:
            out.append((sign, chunk))
    return out


def _scaled_terms(p: Poly, factor: str):
    """Terms of ``factor * p``; parenthesised unless ``p`` is a monomial."""
    if not p:
        return []
    terms = _poly_terms(p)
    if not factor:
        return terms
    if len(terms) == 1:
        sign, body = terms[0]
        if body == "1":
            return [(sign, factor)]
        if body[0].isdigit():
            # keep the integer in front: 2*mu*[w1], not mu*2*[w1]
            num, _, rest = body.partition("*")
            return [(sign, f"{num}*{factor}" + (f"*{rest}" if rest else ""))]
        return [(sign, f"{factor}*{body}")]
    return [("+", f"{factor}*({_join(terms)})")]


def _join(parts) -> str:
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class CoeffElement:
    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms=None):
        self.spec = spec
        out = defaultdict(int)
        for k, c in (terms or {}).items():
            out[k] += c
        clean = {}
        for k, c in out.items():
            if k[0] == "F" and k[1] in ("eta", "eta2"):
                c %= 2
            if c:
                clean[k] = c
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, spec):
        return cls(spec)

    @classmethod
    def scalar(cls, spec, c=1, basis="1"):
        return cls(spec, {("F", basis, spec.zero): c})

    @classmethod
    def symbol(cls, spec, hw, basis="1", c=1):
        """``basis * V(hw)``; ``hw`` must be of real or quaternionic type."""
        t = rep_type(spec, hw)
        if t is RepType.C:
            return cls.r_term(spec, hw, 0, c)
        return cls(spec, {("F", basis, hw): c})

    @classmethod
    def r_term(cls, spec, hw, i=0, c=1):
        """``c * r(V(hw) beta^i)`` for a complex-type ``hw``, canonicalised."""
        if rep_type(spec, hw) is not RepType.C:
            return realify(CRep.irrep(spec, hw, i, c))
        if not is_canonical(spec, hw):
            hw = conj_hw(spec, hw)
            c *= (-1) ** i
        return cls(spec, {("r", hw, i % 4): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CoeffElement.scalar(self.spec, other)
        return isinstance(other, CoeffElement) and self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = CoeffElement.scalar(self.spec, other)
        _check(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CoeffElement(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return CoeffElement(self.spec, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = CoeffElement.scalar(self.spec, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CoeffElement(self.spec, {k: c * other for k, c in self.terms.items()})
        return coeff_mul(self, other)

    __rmul__ = __mul__

    def degrees(self) -> set:
        return {key_degree(self.spec, k) for k in self.terms}

    def homogeneous_parts(self) -> dict:
        out = defaultdict(dict)
        for k, c in self.terms.items():
            out[key_degree(self.spec, k)][k] = c
        return {d: CoeffElement(self.spec, t) for d, t in out.items()}

    def free_part(self, basis: str) -> dict:
        return {k[2]: c for k, c in self.terms.items() if k[0] == "F" and k[1] == basis}

    def r_part(self) -> dict:
        return {(k[1], k[2]): c for k, c in self.terms.items() if k[0] == "r"}

    def render_terms(self):
        spec = self.spec
        parts = []
        for b in BASIS:
            rep = self.free_part(b)
            for want in (RepType.R, RepType.H):
                sub = {hw: c for hw, c in rep.items() if rep_type(spec, hw) is want}
                if not sub:
                    continue
                p = rep_poly(spec, sub)
                if b in ("eta", "eta2"):
                    p = p.mod(2)
                parts.extend(_scaled_terms(p, BASIS_NAME[b]))
        for (hw, i), c in sorted(self.r_part().items()):
            p = irrep_poly(spec, hw)
            rendered = p.render()
            if i:
                if len(p.terms) > 1:
                    rendered = f"({rendered})"
                rendered = _beta_name(i) if rendered == "1" else f"{rendered}*{_beta_name(i)}"
            body = f"r({rendered})"
            if c == 1:
                parts.append(("+", body))
            elif c == -1:
                parts.append(("-", body))
            else:
                parts.append(("-" if c < 0 else "+", f"{abs(c)}*{body}"))
        return parts

    def render(self) -> str:
        return _join(self.render_terms())

    def __repr__(self):
        return f"CoeffElement({self.render()})"


def _symbol_product(spec, h1, h2) -> CoeffElement:
    """Product of two degree-0/-4 symbols as an element of KR*_G(pt)."""
    d = (symbol_degree(spec, h1) + symbol_degree(spec, h2)) % 8
    out = {}
    for hw, m in tensor_irreps(spec, h1, h2):
        t = rep_type(spec, hw)
        if t is RepType.C:
            if is_canonical(spec, hw):
                out[("r", hw, (d // 2) % 4)] = out.get(("r", hw, (d // 2) % 4), 0) + m
            continue
        if symbol_degree(spec, hw) == d:
            out[("F", "1", hw)] = out.get(("F", "1", hw), 0) + m
        else:
            if m % 2:
                raise NotReal(f"odd multiplicity {m} of {hw} in a Real tensor product")
            out[("F", "mu", hw)] = out.get(("F", "mu", hw), 0) + m // 2
    return CoeffElement(spec, out)


def _pt_times(spec, b: str, x: CoeffElement) -> CoeffElement:
    """``b * x`` for a KR*(pt) basis element ``b``."""
    if b == "1":
        return x
    out = defaultdict(int)
    for k, c in x.terms.items():
        if k[0] == "F":
            prod = pt_mul(b, k[1])
            if prod:
                out[("F", prod[1], k[2])] += c * prod[0]
        elif b == "mu":
            out[("r", k[1], (k[2] + 2) % 4)] += 2 * c
    return CoeffElement(spec, out)


def coeff_mul(a: CoeffElement, b: CoeffElement) -> CoeffElement:
    _check(a, b)
    spec = a.spec
    out = CoeffElement(spec)
    acc = defaultdict(int)
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            if k1[0] == "F" and k2[0] == "F":
                prod = pt_mul(k1[1], k2[1])
                if not prod:
                    continue
                sym = _symbol_product(spec, k1[2], k2[2])
                part = _pt_times(spec, prod[1], sym)
                for k, c in part.terms.items():
                    acc[k] += c * c1 * c2 * prod[0]
            elif k1[0] == "F" or k2[0] == "F":
                f, rk = (k1, k2) if k1[0] == "F" else (k2, k1)
                x = complexify(CoeffElement(spec, {f: 1})) * CRep.irrep(spec, rk[1], rk[2])
                for k, c in realify(x).terms.items():
                    acc[k] += c * c1 * c2
            else:
                x = CRep.irrep(spec, k1[1], k1[2])
                y = complexify(CoeffElement(spec, {k2: 1}))
                for k, c in realify(x * y).terms.items():
                    acc[k] += c * c1 * c2
    return out + CoeffElement(spec, acc)


def complexify(a: CoeffElement) -> CRep:
    spec = a.spec
    out = defaultdict(int)
    for k, c in a.terms.items():
        if k[0] == "F":
            b, hw = k[1], k[2]
            shift = 2 if rep_type(spec, hw) is RepType.H else 0
            if b == "1":
                out[(hw, shift)] += c
            elif b == "mu":
                out[(hw, shift + 2)] += 2 * c
        else:
            hw, i = k[1], k[2]
            out[(hw, i)] += c
            out[(conj_hw(spec, hw), i)] += c * (-1) ** i
    return CRep(spec, out)


# r(beta^i) in KR*(pt) as (scalar, basis)
_R_BETA = {0: (2, "1"), 1: (1, "eta2"), 2: (1, "mu"), 3: None}


def realify(x: CRep) -> CoeffElement:
    spec = x.spec
    out = defaultdict(int)
    for (hw, i), c in x.terms.items():
        t = rep_type(spec, hw)
        if t is RepType.C:
            if is_canonical(spec, hw):
                out[("r", hw, i)] += c
            else:
                out[("r", conj_hw(spec, hw), i)] += c * (-1) ** i
            continue
        j = (i - 2) % 4 if t is RepType.H else i
        rb = _R_BETA[j]
        if rb:
            out[("F", rb[1], hw)] += c * rb[0]
    return CoeffElement(spec, out)


def coefficient_from_rep(spec, rep, degree: int) -> CoeffElement:
    """The element ``y`` of degree 0 or -4 with ``c(y) = rep * beta^(-degree/2)``.

    ``rep`` is a decomposition dict or a :class:`Poly`.  Raises NotReal when
    no such element exists.
    """
    if isinstance(rep, Poly):
        rep = poly_decomposition(spec, rep)
    d = degree % 8
    if d not in (0, 4):
        raise ValueError("Real classes live in degree 0 or -4")
    out = defaultdict(int)
    for hw, m in rep.items():
        t = rep_type(spec, hw)
        if t is RepType.C:
            if rep.get(conj_hw(spec, hw), 0) != m:
                raise NotReal(f"{hw} and its conjugate appear with different multiplicities")
            if is_canonical(spec, hw):
                out[("r", hw, d // 2)] += m
        elif symbol_degree(spec, hw) == d:
            out[("F", "1", hw)] += m
        else:
            if m % 2:
                raise NotReal(f"{hw} needs even multiplicity in degree -{(8 - d) % 8}")
            out[("F", "mu", hw)] += m // 2
    return CoeffElement(spec, out)


def type_counts(spec, hws) -> tuple:
    """``(n_R, n_C, n_H)`` over a conjugation-closed set of irreducibles."""
    counts = {RepType.R: 0, RepType.C: 0, RepType.H: 0}
    for hw in hws:
        counts[rep_type(spec, hw)] += 1
    return counts[RepType.R], counts[RepType.C], counts[RepType.H]


_DESCRIPTIONS = {
    0: "RR(G)", 1: "RR(G)/rho(R(G))", 2: "R(G)/j(RH(G))", 3: "0",
    4: "RH(G)", 5: "RH(G)/eta(R(G))", 6: "R(G)/i(RR(G))", 7: "0",
}


def degree_rank(counts, q: int) -> dict:
    """Group structure of ``KR^{-q}_G(pt)`` from type counts ``(n_R, n_C, n_H)``.

    Returns the quotient description with its free rank and the number of
    ``Z/2`` summands.
    """
    if not 0 <= q <= 7:
        raise ValueError("q must lie in 0..7")
    n_r, n_c, n_h = counts
    pairs = n_c // 2
    free, torsion = {
        0: (n_r + n_h + pairs, 0), 1: (0, n_r), 2: (pairs, n_r), 3: (0, 0),
        4: (n_r + n_h + pairs, 0), 5: (0, n_h), 6: (pairs, n_h), 7: (0, 0),
    }[q]
    return {"q": q, "group": _DESCRIPTIONS[q], "free_rank": free, "z2_rank": torsion}


def basis_by_degree(spec, hws, q: int) -> tuple:
    """Count ``(free, Z/2)`` basis keys of degree ``-q`` over ``hws``."""
    free = torsion = 0
    d = (-q) % 8
    for hw in hws:
        t = rep_type(spec, hw)
        if t is RepType.C:
            if is_canonical(spec, hw):
                free += sum(1 for i in range(4) if (-2 * i) % 8 == d)
            continue
        for b in BASIS:
            if key_degree(spec, ("F", b, hw)) == d:
                if b in ("eta", "eta2"):
                    torsion += 1
                else:
                    free += 1
    return free, torsion


def eta(spec):
    return CoeffElement.scalar(spec, 1, "eta")


def mu(spec):
    return CoeffElement.scalar(spec, 1, "mu")


def one(spec):
    return CoeffElement.scalar(spec, 1)


def beta(spec, i=1):
    return CRep.irrep(spec, spec.zero, i)
