"""Root data, weight lattices and involutions for the supported groups.

Weights are integer tuples.  The coordinate conventions are

* ``U(n)``: the standard basis ``e_1..e_n`` of the diagonal torus characters.
* ``SU(n)``: the ``U(n)`` lattice modulo the all-ones vector; the stored
  representative always has last coordinate zero.
* ``Sp(2m)``: ``L_1..L_m``; ``rank`` is the symplectic rank ``m``.
* ``G2``: the fundamental-weight basis, with ``w1`` the 7-dimensional and
  ``w2`` the 14-dimensional (adjoint) highest weight.
* tori: the standard basis; every weight is dominant.

Fundamental weights are ordered as follows, and every downstream index
(``[wI]``, ``dR(I)``, ``dH(I)``) refers to this ordering:

* ``U(n)``: highest weights of the exterior powers ``Λ^1 .. Λ^n``.
* ``SU(n)``: ``Λ^1 .. Λ^{n-1}``.
* ``Sp(2m)``: ``L_1 + .. + L_i`` for ``i = 1..m``.
* ``G2``: ``w1, w2``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import InvalidGroup, OddRankSymplectic, ParseError, UnsupportedFamily

Weight = tuple


class Family(enum.Enum):
    UNITARY = "U"
    SPECIAL_UNITARY = "SU"
    SYMPLECTIC = "Sp"
    G2 = "G2"
    TORUS = "T"
    FINITE = "finite"


class Involution(enum.Enum):
    TRIVIAL = "trivial"
    CONJ = "conj"
    SYMP = "symp"


# G2 in the fundamental-weight basis: short simple root first.
_G2_SIMPLE = ((2, -1), (-3, 2))
_G2_POSITIVE = ((2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1))
_G2_GRAM = ((2, 3), (3, 6))


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    rank: int
    involution: Involution = Involution.TRIVIAL
    finite: tuple = field(default=())

    def __str__(self):
        if self.family is Family.SYMPLECTIC:
            name = f"Sp({2 * self.rank})"
        elif self.family is Family.G2:
            name = "G2"
        elif self.family is Family.FINITE:
            name = "x".join(self.finite) or "trivial"
        else:
            name = f"{self.family.value}({self.rank})"
        return f"{name}[{self.involution.value}]"

    @property
    def dim(self) -> int:
        """Length of weight vectors."""
        return self.rank

    @property
    def is_torus(self):
        return self.family is Family.TORUS

    @cached_property
    def simple_roots(self) -> tuple:
        n, f = self.rank, self.family
        if f in (Family.UNITARY, Family.SPECIAL_UNITARY):
            return tuple(_unit(n, i, 1, i + 1, -1) for i in range(n - 1))
        if f is Family.SYMPLECTIC:
            roots = [_unit(n, i, 1, i + 1, -1) for i in range(n - 1)]
            roots.append(_unit(n, n - 1, 2))
            return tuple(roots)
        if f is Family.G2:
            return _G2_SIMPLE
        return ()

    @cached_property
    def positive_roots(self) -> tuple:
        n, f = self.rank, self.family
        if f in (Family.UNITARY, Family.SPECIAL_UNITARY):
            return tuple(_unit(n, i, 1, j, -1) for i in range(n) for j in range(i + 1, n))
        if f is Family.SYMPLECTIC:
            roots = []
            for i in range(n):
                for j in range(i + 1, n):
                    roots.append(_unit(n, i, 1, j, -1))
                    roots.append(_unit(n, i, 1, j, 1))
                roots.append(_unit(n, i, 2))
            return tuple(roots)
        if f is Family.G2:
            return _G2_POSITIVE
        return ()

    @cached_property
    def rho(self) -> Weight:
        n, f = self.rank, self.family
        if f in (Family.UNITARY, Family.SPECIAL_UNITARY):
            return self.normalize(tuple(n - 1 - i for i in range(n)))
        if f is Family.SYMPLECTIC:
            return tuple(n - i for i in range(n))
        if f is Family.G2:
            return (1, 1)
        return (0,) * n

    def inner(self, a: Weight, b: Weight) -> Fraction:
        """Weyl-invariant inner product."""
        f = self.family
        if f is Family.G2:
            return Fraction(sum(a[i] * _G2_GRAM[i][j] * b[j] for i in range(2) for j in range(2)))
        s = sum(x * y for x, y in zip(a, b))
        if f is Family.SPECIAL_UNITARY:
            return Fraction(s) - Fraction(sum(a) * sum(b), self.rank)
        return Fraction(s)

    def normalize(self, w: Weight) -> Weight:
        if self.family is Family.SPECIAL_UNITARY:
            last = w[-1]
            return tuple(x - last for x in w)
        return tuple(w)

    def pairing(self, w: Weight, i: int) -> int:
        """``<w, alpha_i^vee>`` for the i-th simple root."""
        f = self.family
        if f is Family.G2:
            return w[i]
        if f is Family.SYMPLECTIC and i == self.rank - 1:
            return w[i]
        return w[i] - w[i + 1]

    def reflect(self, w: Weight, i: int) -> Weight:
        k = self.pairing(w, i)
        if k == 0:
            return w
        a = self.simple_roots[i]
        return self.normalize(tuple(x - k * y for x, y in zip(w, a)))

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing(w, i) >= 0 for i in range(len(self.simple_roots)))

    def dominant_rep(self, w: Weight) -> Weight:
        w = self.normalize(w)
        moved = True
        while moved:
            moved = False
            for i in range(len(self.simple_roots)):
                if self.pairing(w, i) < 0:
                    w = self.reflect(w, i)
                    moved = True
        return w

    def dominant_with_sign(self, w: Weight):
        """Dominant conjugate of ``w`` and the sign of the Weyl element used.

        The sign is 0 when ``w`` lies on a wall (is fixed by a reflection).
        """
        w = self.normalize(w)
        sign = 1
        moved = True
        while moved:
            moved = False
            for i in range(len(self.simple_roots)):
                if self.pairing(w, i) < 0:
                    w = self.reflect(w, i)
                    sign = -sign
                    moved = True
        if any(self.pairing(w, i) == 0 for i in range(len(self.simple_roots))):
            sign = 0
        return w, sign

    @cached_property
    def weyl_order(self) -> int:
        return len(weyl_orbit(self, self.rho)) if self.simple_roots else 1

    @cached_property
    def fundamentals(self) -> tuple:
        return tuple(fundamental_weights(self))

    @property
    def zero(self) -> Weight:
        return (0,) * self.dim

    @cached_property
    def tau(self) -> tuple:
        return involution_weight_map(self)

    def bar(self, w: Weight) -> Weight:
        """Weight map ``w -> -tau(w)`` underlying the involution on characters."""
        t = self.tau
        return self.normalize(tuple(-sum(t[i][j] * w[j] for j in range(len(w))) for i in range(len(w))))


def _unit(n, i, a, j=None, b=0):
    v = [0] * n
    v[i] += a
    if j is not None:
        v[j] += b
    return tuple(v)


def build_group(family, rank=None, involution=Involution.TRIVIAL, finite=()):
    """Validated :class:`GroupSpec`."""
    family = Family(family) if not isinstance(family, Family) else family
    involution = Involution(involution) if not isinstance(involution, Involution) else involution
    if family is Family.FINITE:
        if involution is not Involution.TRIVIAL:
            raise InvalidGroup("finite groups support only the trivial involution")
        return GroupSpec(family, 0, involution, tuple(finite))
    if family is Family.G2:
        if rank not in (None, 2):
            raise InvalidGroup("G2 has rank 2")
        rank = 2
        if involution is not Involution.TRIVIAL:
            raise InvalidGroup("G2 is only supported with the trivial involution")
    if not isinstance(rank, int) or rank < 1:
        raise InvalidGroup(f"rank must be a positive integer, got {rank!r}")
    if family is Family.SPECIAL_UNITARY and rank < 2:
        raise InvalidGroup("SU(n) needs n >= 2")
    if involution is Involution.SYMP:
        if family is not Family.UNITARY:
            raise InvalidGroup("the symplectic-type involution lives on U(2m)")
        if rank % 2:
            raise OddRankSymplectic(f"symplectic-type involution needs even rank, got U({rank})")
    if involution is Involution.CONJ and family not in (Family.UNITARY, Family.TORUS):
        raise InvalidGroup("complex conjugation is supported on U(n) and tori only")
    return GroupSpec(family, rank, involution)


def fundamental_weights(spec: GroupSpec) -> list:
    n, f = spec.rank, spec.family
    if f is Family.UNITARY:
        return [tuple([1] * k + [0] * (n - k)) for k in range(1, n + 1)]
    if f is Family.SPECIAL_UNITARY:
        return [tuple([1] * k + [0] * (n - k)) for k in range(1, n)]
    if f is Family.SYMPLECTIC:
        return [tuple([1] * k + [0] * (n - k)) for k in range(1, n + 1)]
    if f is Family.G2:
        return [(1, 0), (0, 1)]
    raise UnsupportedFamily(f"{f.value} has no fundamental representations")


def weyl_orbit(spec: GroupSpec, w: Weight) -> frozenset:
    """Orbit of ``w`` as the closure under simple reflections."""
    w = spec.normalize(tuple(w))
    seen = {w}
    todo = [w]
    while todo:
        v = todo.pop()
        for i in range(len(spec.simple_roots)):
            u = spec.reflect(v, i)
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return frozenset(seen)


def involution_weight_map(spec: GroupSpec) -> tuple:
    """Lattice matrix ``tau`` with the induced character map ``w -> -tau(w)``.

    Trivial involution: ``tau = 1``, so the character map is ``V -> dual V``.
    Complex conjugation: ``tau = -1`` (identity on characters).
    Symplectic type on ``U(2m)``: ``tau = -P`` with ``P`` swapping ``i`` and
    ``i + m``, which acts on characters as a Weyl element, hence trivially.
    """
    n = spec.dim
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    if spec.involution is Involution.TRIVIAL:
        return tuple(map(tuple, ident))
    if spec.involution is Involution.CONJ:
        return tuple(tuple(-x for x in row) for row in ident)
    m = n // 2
    perm = [(i + m) % n for i in range(n)]
    return tuple(tuple(-int(perm[i] == j) for j in range(n)) for i in range(n))


_TOKEN = re.compile(r"^(SU|U|C|Sp|G|T)(\d+)$")


def parse_group(token: str, involution: str = "trivial") -> GroupSpec:
    """Parse CLI tokens ``U3``, ``SU3``, ``C2`` (= Sp(4)), ``G2``, ``T2``."""
    m = _TOKEN.match(token.strip())
    if not m:
        raise ParseError("cannot parse group token (expected U3, SU3, C2, Sp4, G2 or T2)", 0, token)
    kind, num = m.group(1), int(m.group(2))
    inv = Involution(involution)
    if kind == "G":
        if num != 2:
            raise InvalidGroup(f"only G2 is supported, got {token!r}")
        return build_group(Family.G2, 2, inv)
    family = {"U": Family.UNITARY, "SU": Family.SPECIAL_UNITARY, "C": Family.SYMPLECTIC,
              "Sp": Family.SYMPLECTIC, "T": Family.TORUS}[kind]
    if kind == "Sp":
        if num % 2:
            raise InvalidGroup("Sp(2m) token needs an even number")
        num //= 2
    return build_group(family, num, inv)
