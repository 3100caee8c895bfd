"""Exact character arithmetic for the supported compact groups.

Characters are finitely supported weight multisets.  Irreducible characters
come from Freudenthal's recursion, decompositions from repeated subtraction
of the irreducible attached to a maximal dominant weight.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .errors import NonDominant, NonInvariantInput, UnclassifiableTwisted, UnsupportedGroup, VirtualInput
from .poly import Poly
from .rootdata import Family, GroupSpec, Involution, weyl_orbit


class RepType(enum.Enum):
    R = "R"
    C = "C"
    H = "H"


class Character:
    """Weight multiset ``weight -> multiplicity`` (virtual when negative)."""

    __slots__ = ("spec", "mult")

    def __init__(self, spec: GroupSpec, mult=None):
        self.spec = spec
        self.mult = {w: m for w, m in (mult or {}).items() if m}

    @classmethod
    def trivial(cls, spec):
        return cls(spec, {spec.zero: 1})

    @property
    def dim(self) -> int:
        return sum(self.mult.values())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Character.trivial(self.spec) * other
        return isinstance(other, Character) and self.mult == other.mult

    def __hash__(self):
        return hash(frozenset(self.mult.items()))

    def __add__(self, other):
        out = dict(self.mult)
        for w, m in other.mult.items():
            out[w] = out.get(w, 0) + m
        return Character(self.spec, out)

    def __neg__(self):
        return Character(self.spec, {w: -m for w, m in self.mult.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Character(self.spec, {w: m * other for w, m in self.mult.items()})
        out = defaultdict(int)
        for w1, m1 in self.mult.items():
            for w2, m2 in other.mult.items():
                out[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
        return Character(self.spec, out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Character(dim={self.dim}, {len(self.mult)} weights)"


def is_weyl_invariant(chi: Character) -> bool:
    spec = chi.spec
    for w, m in chi.mult.items():
        for i in range(len(spec.simple_roots)):
            if chi.mult.get(spec.reflect(w, i), 0) != m:
                return False
    return True


def _height(spec, w):
    return spec.inner(w, spec.rho)


@lru_cache(maxsize=None)
def _dominant_mult(spec: GroupSpec, hw: tuple) -> dict:
    """Freudenthal's recursion on the dominant weights of ``V(hw)`` only.

    Multiplicities of non-dominant weights are read off their dominant
    conjugates.  Weights are processed by depth below ``hw`` so every
    ``mu + k alpha`` needed on the right-hand side is already known.
    """
    pos = spec.positive_roots
    heights = {a: _root_height(spec, a) for a in pos}
    depth = {hw: 0}
    todo = [hw]
    while todo:
        mu = todo.pop()
        for a in pos:
            nu = spec.normalize(tuple(x - y for x, y in zip(mu, a)))
            if nu not in depth and spec.is_dominant(nu):
                depth[nu] = depth[mu] + heights[a]
                todo.append(nu)
    lam_rho = tuple(a + b for a, b in zip(hw, spec.rho))
    top = spec.inner(lam_rho, lam_rho)
    mult = {hw: 1}
    for mu in sorted(depth, key=lambda w: (depth[w], w)):
        if mu == hw:
            continue
        mr = tuple(a + b for a, b in zip(mu, spec.rho))
        denom = top - spec.inner(mr, mr)
        acc = Fraction(0)
        for a in pos:
            k = 1
            while depth[mu] - k * heights[a] >= 0:
                nu = spec.normalize(tuple(x + k * y for x, y in zip(mu, a)))
                m = mult.get(spec.dominant_rep(nu))
                if m:
                    acc += m * spec.inner(nu, a)
                k += 1
        val = 2 * acc / denom
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        if val:
            mult[mu] = int(val)
    return mult


@lru_cache(maxsize=None)
def _irrep_mult(spec: GroupSpec, hw: tuple) -> dict:
    out = {}
    for mu, m in _dominant_mult(spec, hw).items():
        for w in weyl_orbit(spec, mu):
            out[w] = m
    return out


def _root_height(spec, a):
    """Sum of the simple-root coefficients of the positive root ``a``."""
    if spec.family is Family.G2:
        return {(2, -1): 1, (-3, 2): 1, (-1, 1): 2, (1, 0): 3, (3, -1): 4, (0, 1): 5}[a]
    # partial sums of the coordinates give the coefficients of e_k - e_{k+1};
    # for Sp the coefficient of 2e_m is half the coordinate sum
    h = sum(sum(a[:k + 1]) for k in range(len(a) - 1))
    if spec.family is Family.SYMPLECTIC:
        h += sum(a) // 2
    return h


def irrep_character(spec: GroupSpec, hw) -> Character:
    hw = spec.normalize(tuple(hw))
    if spec.is_torus:
        return Character(spec, {hw: 1})
    if not spec.is_dominant(hw):
        raise NonDominant(f"{hw} is not dominant for {spec}")
    return Character(spec, _irrep_mult(spec, hw))


def _shifted_irrep(spec, w):
    """``(hw, sign)`` with ``[w] = sign * V(hw)`` by the dot action; sign 0 on walls."""
    v = tuple(a + b for a, b in zip(w, spec.rho))
    d, sign = spec.dominant_with_sign(v)
    if not sign:
        return None, 0
    return spec.normalize(tuple(a - b for a, b in zip(d, spec.rho))), sign


def decompose(chi: Character) -> dict:
    """Irreducible decomposition ``highest weight -> multiplicity``.

    A Weyl-invariant character equals ``sum c_w [w]`` over its weights,
    where ``[w]`` is the irreducible at the dot-dominant conjugate of ``w``
    with the sign of that Weyl element.
    """
    spec = chi.spec
    if spec.is_torus:
        return dict(chi.mult)
    if not is_weyl_invariant(chi):
        raise NonInvariantInput("character is not Weyl invariant")
    out = defaultdict(int)
    for w, c in chi.mult.items():
        hw, sign = _shifted_irrep(spec, w)
        if sign:
            out[hw] += sign * c
    return {hw: m for hw, m in out.items() if m}


def tensor_decompose(spec: GroupSpec, a: Character, b: Character) -> dict:
    for c in (a, b):
        if not spec.is_torus and not is_weyl_invariant(c):
            raise NonInvariantInput("tensor factors must be Weyl invariant")
    return decompose(a * b)


@lru_cache(maxsize=None)
def tensor_irreps(spec: GroupSpec, hw1: tuple, hw2: tuple) -> tuple:
    """Cached decomposition of ``V(hw1) (x) V(hw2)`` as sorted pairs."""
    if hw2 < hw1:
        hw1, hw2 = hw2, hw1
    if spec.is_torus:
        return ((spec.normalize(tuple(a + b for a, b in zip(hw1, hw2))), 1),)
    a, b = irrep_character(spec, hw1), irrep_character(spec, hw2)
    if len(b.mult) > len(a.mult):
        a, b = b, a
        hw1, hw2 = hw2, hw1
    # Brauer-Klimyk: V(hw1) (x) V(hw2) = sum over weights w of V(hw2) of [hw1 + w]
    out = defaultdict(int)
    for w, m in b.mult.items():
        hw, sign = _shifted_irrep(spec, tuple(x + y for x, y in zip(hw1, w)))
        if sign:
            out[hw] += sign * m
    return tuple(sorted((hw, m) for hw, m in out.items() if m))


def class_character(spec, rep: dict) -> Character:
    out = Character(spec)
    for hw, m in rep.items():
        out = out + irrep_character(spec, hw) * m
    return out


def adams(k: int, a: Character) -> Character:
    out = defaultdict(int)
    for w, m in a.mult.items():
        out[tuple(k * x for x in w)] += m
    return Character(a.spec, out)


def exterior_power(k: int, a: Character) -> Character:
    """``Λ^k`` via Newton's identity ``k Λ^k = Σ (-1)^(i-1) ψ^i Λ^(k-i)``."""
    if any(m < 0 for m in decompose(a).values()):
        raise VirtualInput("exterior powers need an actual representation")
    spec = a.spec
    lam = [Character.trivial(spec)]
    for j in range(1, k + 1):
        acc = Character(spec)
        for i in range(1, j + 1):
            term = adams(i, a) * lam[j - i]
            acc = acc + term if i % 2 else acc - term
        q = {}
        for w, m in acc.mult.items():
            if m % j:
                raise ArithmeticError("Newton identity produced a non-divisible coefficient")
            q[w] = m // j
        lam.append(Character(spec, q))
    return lam[k]


def conj_dual(spec: GroupSpec, a: Character) -> Character:
    """Character of ``σ̄*V``: support transformed by ``w -> -tau(w)``."""
    out = defaultdict(int)
    for w, m in a.mult.items():
        out[spec.bar(w)] += m
    return Character(spec, out)


def conj_hw(spec: GroupSpec, hw: tuple) -> tuple:
    """Highest weight of ``σ̄*V(hw)``."""
    return spec.dominant_rep(spec.bar(hw))


@lru_cache(maxsize=None)
def classify_type(spec: GroupSpec, hw) -> RepType:
    hw = spec.normalize(tuple(hw))
    if not spec.is_torus and not spec.is_dominant(hw):
        raise NonDominant(f"{hw} is not dominant")
    if conj_hw(spec, hw) != hw:
        return RepType.C
    inv = spec.involution
    if inv is Involution.TRIVIAL:
        chi = irrep_character(spec, hw)
        ind = decompose(adams(2, chi)).get(spec.zero, 0)
        if ind == 1:
            return RepType.R
        if ind == -1:
            return RepType.H
        raise ArithmeticError(f"self-conjugate irreducible with indicator {ind}")
    if spec.is_torus:
        return RepType.R
    # twisted cases: polynomial irreducibles of U(n), i.e. constituents of
    # tensor products of exterior powers of the standard representation
    if spec.family is not Family.UNITARY or min(hw) < 0:
        raise UnclassifiableTwisted(f"no type table for {hw} under {spec}")
    if inv is Involution.CONJ:
        return RepType.R
    return RepType.R if sum(hw) % 2 == 0 else RepType.H


def fundamental_characters(spec):
    return [irrep_character(spec, w) for w in spec.fundamentals]


def fundamental_coords(spec: GroupSpec, hw: tuple) -> tuple:
    """Exponents ``a`` with ``hw = Σ a_i ϖ_i``."""
    coords = [spec.pairing(hw, i) for i in range(len(spec.simple_roots))]
    if spec.family is Family.UNITARY:
        coords.append(hw[-1])
    return tuple(coords)


@lru_cache(maxsize=None)
def monomial_character(spec: GroupSpec, exps: tuple) -> Character:
    if not any(exps):
        return Character.trivial(spec)
    i = max(k for k, e in enumerate(exps) if e)
    smaller = list(exps)
    smaller[i] -= 1
    return monomial_character(spec, tuple(smaller)) * irrep_character(spec, spec.fundamentals[i])


def poly_character(spec: GroupSpec, p: Poly) -> Character:
    out = Character(spec)
    for m, c in p.terms.items():
        out = out + monomial_character(spec, m) * c
    return out


def poly_in_fundamentals(spec: GroupSpec, a) -> Poly:
    """Unique polynomial in the fundamental classes evaluating to ``a``.

    ``a`` may be a :class:`Character` or a decomposition dict.
    """
    rest = dict(decompose(a) if isinstance(a, Character) else a)
    nf = len(spec.fundamentals)
    out = Poly(nf)
    while rest:
        # the highest constituent is the leading weight of exactly one monomial
        hw = max(rest, key=lambda w: (_height(spec, w), w))
        exps = fundamental_coords(spec, hw)
        if any(e < 0 for e in exps):
            raise NonInvariantInput(f"{hw} is not a polynomial class (negative determinant power)")
        m = rest[hw]
        out = out + Poly(nf, {exps: m})
        for h, k in monomial_decomposition(spec, exps):
            v = rest.get(h, 0) - m * k
            if v:
                rest[h] = v
            else:
                rest.pop(h, None)
    return out


@lru_cache(maxsize=None)
def irrep_poly(spec: GroupSpec, hw: tuple) -> Poly:
    return poly_in_fundamentals(spec, {hw: 1})


@lru_cache(maxsize=None)
def monomial_decomposition(spec: GroupSpec, exps: tuple) -> tuple:
    """Irreducible constituents of a monomial in the fundamentals, one factor at a time."""
    if not any(exps):
        return ((spec.zero, 1),)
    i = next(j for j, e in enumerate(exps) if e)
    prev = monomial_decomposition(spec, exps[:i] + (exps[i] - 1,) + exps[i + 1:])
    out = defaultdict(int)
    for hw, m in prev:
        for h, k in tensor_irreps(spec, hw, spec.fundamentals[i]):
            out[h] += m * k
    return tuple(sorted((h, m) for h, m in out.items() if m))


def poly_decomposition(spec: GroupSpec, p: Poly) -> dict:
    out = defaultdict(int)
    for m, c in p.terms.items():
        for hw, k in monomial_decomposition(spec, m):
            out[hw] += c * k
    return {hw: k for hw, k in out.items() if k}


def fundamental_permutation(spec: GroupSpec) -> tuple:
    """Index permutation of the fundamentals induced by ``σ̄*``."""
    funds = spec.fundamentals
    images = [conj_hw(spec, w) for w in funds]
    if any(v not in funds for v in images):
        raise UnsupportedGroup(f"the involution on {spec} does not permute the fundamental classes")
    return tuple(funds.index(v) for v in images)


def weyl_orbit_sum(spec, w) -> Character:
    return Character(spec, {v: 1 for v in weyl_orbit(spec, w)})
