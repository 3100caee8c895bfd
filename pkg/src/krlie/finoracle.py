"""Finite-group character tables, Frobenius-Schur indicators and type ranks.

Character values live in Z[z]/(Phi_N(z)) with ``z = exp(2 pi i / N)`` and
``N`` the group exponent, so every indicator is computed exactly.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import MalformedTable


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients (lowest degree first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _divide_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _divide_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


class Cyclotomic:
    """Integer combination ``sum a_j z^j`` of N-th roots of unity."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        c = [0] * n
        for j, a in enumerate(coeffs):
            c[j % n] += a
        self.coeffs = tuple(c)

    @classmethod
    def integer(cls, n, k):
        return cls(n, [k])

    @classmethod
    def root(cls, n, j, a=1):
        c = [0] * n
        c[j % n] = a
        return cls(n, c)

    def _reduced(self):
        """Remainder modulo Phi_N, the canonical representative."""
        phi = cyclotomic_poly(self.n)
        r = list(self.coeffs)
        deg = len(phi) - 1
        for i in range(len(r) - 1, deg - 1, -1):
            q = r[i]
            if q:
                for j, c in enumerate(phi):
                    r[i - deg + j] -= q * c
        return tuple(r[:deg])

    def __add__(self, other):
        return Cyclotomic(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.n, [a * other for a in self.coeffs])
        out = [0] * self.n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % self.n] += a * b
        return Cyclotomic(self.n, out)

    def conj(self):
        return Cyclotomic(self.n, [self.coeffs[(-j) % self.n] for j in range(self.n)])

    def lift(self, m: int):
        """Same number viewed in Z[z'] with z' a primitive (N*m)-th root."""
        out = [0] * (self.n * m)
        for j, a in enumerate(self.coeffs):
            out[j * m] += a
        return Cyclotomic(self.n * m, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclotomic.integer(self.n, other)
        return self.n == other.n and self._reduced() == other._reduced()

    def __hash__(self):
        return hash((self.n, self._reduced()))

    def as_int(self) -> int:
        r = self._reduced()
        if any(r[1:]):
            raise ValueError("not a rational integer")
        return r[0] if r else 0

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self.coeffs})"


@dataclass(frozen=True)
class CharTable:
    name: str
    order: int
    exponent: int
    sizes: tuple
    squares: tuple
    chars: tuple  # rows of Cyclotomic values, one per class

    @property
    def nclasses(self):
        return len(self.sizes)

    def dims(self):
        return [row[0].as_int() for row in self.chars]


def validate(t: CharTable) -> None:
    if sum(t.sizes) != t.order:
        raise MalformedTable("class sizes do not sum to the group order")
    if len(t.chars) != t.nclasses or any(len(r) != t.nclasses for r in t.chars):
        raise MalformedTable("character table must be square")
    if any(not 0 <= s < t.nclasses for s in t.squares):
        raise MalformedTable("squaring map points outside the class list")
    for i, a in enumerate(t.chars):
        for j, b in enumerate(t.chars):
            total = Cyclotomic.integer(t.exponent, 0)
            for size, x, y in zip(t.sizes, a, b):
                total = total + x * y.conj() * size
            if total != (t.order if i == j else 0):
                raise MalformedTable(f"rows {i} and {j} fail orthogonality")


def fs_indicator(t: CharTable, i: int) -> int:
    """``(1/|G|) sum_g chi_i(g^2)``."""
    row = t.chars[i]
    total = Cyclotomic.integer(t.exponent, 0)
    for size, sq in zip(t.sizes, t.squares):
        total = total + row[sq] * size
    val = total.as_int()
    if val % t.order:
        raise MalformedTable("indicator sum is not divisible by the group order")
    return val // t.order


def real_quat_tables(t: CharTable) -> dict:
    """Ranks of R(G,F), RR(G,F), RH(G,F) for F = R, C, H."""
    ind = [fs_indicator(t, i) for i in range(t.nclasses)]
    n_r, n_c, n_h = ind.count(1), ind.count(0), ind.count(-1)
    return {
        "R": (n_r, n_c, n_h),
        "RR": (n_r, n_c // 2, n_h),
        "RH": (n_h, n_c // 2, n_r),
    }


def cyclic(n: int) -> CharTable:
    if n < 1:
        raise MalformedTable("cyclic group order must be positive")
    chars = tuple(tuple(Cyclotomic.root(n, j * k) for k in range(n)) for j in range(n))
    return CharTable(f"C{n}", n, n, (1,) * n, tuple(2 * k % n for k in range(n)), chars)


def trivial_group() -> CharTable:
    return CharTable("trivial", 1, 1, (1,), (0,), ((Cyclotomic.integer(1, 1),),))


def quaternion8() -> CharTable:
    # classes: {1}, {-1}, {+-i}, {+-j}, {+-k}; i^2 = j^2 = k^2 = -1
    rows = [
        (1, 1, 1, 1, 1),
        (1, 1, 1, -1, -1),
        (1, 1, -1, 1, -1),
        (1, 1, -1, -1, 1),
        (2, -2, 0, 0, 0),
    ]
    chars = tuple(tuple(Cyclotomic.integer(4, v) for v in r) for r in rows)
    return CharTable("Q8", 8, 4, (1, 1, 2, 2, 2), (0, 0, 1, 1, 1), chars)


def direct_product(t1: CharTable, t2: CharTable) -> CharTable:
    n = t1.exponent * t2.exponent // math.gcd(t1.exponent, t2.exponent)
    m1, m2 = n // t1.exponent, n // t2.exponent
    c2 = t2.nclasses
    sizes = tuple(a * b for a in t1.sizes for b in t2.sizes)
    squares = tuple(s1 * c2 + s2 for s1 in t1.squares for s2 in t2.squares)
    chars = tuple(
        tuple(x.lift(m1) * y.lift(m2) for x in r1 for y in r2)
        for r1 in t1.chars for r2 in t2.chars
    )
    return CharTable(f"{t1.name}x{t2.name}", t1.order * t2.order, n, sizes, squares, chars)


def klein_four() -> CharTable:
    t = direct_product(cyclic(2), cyclic(2))
    return CharTable("V4", t.order, t.exponent, t.sizes, t.squares, t.chars)


def builtin(name: str) -> CharTable:
    """Tables named like ``Q8``, ``C3``, ``V4`` (or ``K4``), ``trivial`` joined by ``x``."""
    parts = name.strip().split("x")
    tables = []
    for p in parts:
        if p == "Q8":
            tables.append(quaternion8())
        elif p in ("V4", "K4"):
            tables.append(klein_four())
        elif p in ("trivial", "1"):
            tables.append(trivial_group())
        elif re.fullmatch(r"C\d+", p):
            tables.append(cyclic(int(p[1:])))
        else:
            raise MalformedTable(f"unknown built-in group {p!r}")
    out = tables[0]
    for t in tables[1:]:
        out = direct_product(out, t)
    return out


_ENTRY_TERM = re.compile(r"([+-]?)(\d*)(\*?z(?:\^(\d+))?)?")


def _parse_entry(text: str, n: int) -> Cyclotomic:
    text = text.replace(" ", "")
    if not text:
        raise MalformedTable("empty table entry")
    val = Cyclotomic.integer(n, 0)
    pos = 0
    while pos < len(text):
        m = _ENTRY_TERM.match(text, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise MalformedTable(f"cannot parse entry {text!r}")
        a = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            a = -a
        j = 0
        if m.group(3):
            j = int(m.group(4)) if m.group(4) else 1
        val = val + Cyclotomic.root(n, j, a)
        pos = m.end()
    return val


def parse_table(text: str, name: str = "table") -> CharTable:
    """Read the plain-text table format.

    Line 1: ``order <|G|> [exponent <N>]``.  Line 2: one ``size:square-index``
    token per class, or the same numbers as plain ``size square`` pairs.
    Then one row per irreducible with ``;``-separated entries such as
    ``1``, ``-z^2`` or ``1+2*z^3``.  Blank lines and ``#`` lines are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise MalformedTable("table needs a header and a class line")
    head = re.fullmatch(r"order\s+(\d+)(?:\s+exponent\s+(\d+))?", lines[0])
    if not head:
        raise MalformedTable(f"bad header {lines[0]!r}")
    order = int(head.group(1))
    exponent = int(head.group(2) or order)
    sizes, squares = [], []
    toks = lines[1].split()
    if toks and all(re.fullmatch(r"\d+", t) for t in toks):
        # alternative layout: plain "size square" pairs
        if len(toks) % 2:
            raise MalformedTable("class line needs size/square pairs")
        toks = [f"{a}:{b}" for a, b in zip(toks[::2], toks[1::2])]
    for tok in toks:
        m = re.fullmatch(r"(\d+):(\d+)", tok)
        if not m:
            raise MalformedTable(f"bad class token {tok!r}")
        sizes.append(int(m.group(1)))
        squares.append(int(m.group(2)))
    rows = tuple(tuple(_parse_entry(e, exponent) for e in ln.split(";")) for ln in lines[2:])
    t = CharTable(name, order, exponent, tuple(sizes), tuple(squares), rows)
    validate(t)
    return t
