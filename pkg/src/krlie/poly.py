"""Sparse integer polynomials in the fundamental classes.

A monomial is an exponent tuple; ``Poly`` maps monomials to nonzero ints.
"""
from __future__ import annotations

import re
from collections import defaultdict


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, nvars, c=1):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, power=1):
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.nvars, other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, int):
            return Poly.const(self.nvars, other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})
        out = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, i: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return Poly(self.nvars, out)

    def permute(self, perm) -> "Poly":
        """Substitute variable ``i`` by variable ``perm[i]``."""
        out = {}
        for m, c in self.terms.items():
            e = [0] * self.nvars
            for i, k in enumerate(m):
                e[perm[i]] += k
            out[tuple(e)] = c
        return Poly(self.nvars, out)

    def mod(self, n: int) -> "Poly":
        return Poly(self.nvars, {m: c % n for m, c in self.terms.items()})

    def evaluate(self, values, one=1, zero=0):
        """Evaluate with ``values[i]`` substituted for variable ``i``."""
        total = zero
        for m, c in self.terms.items():
            t = one
            for v, k in zip(values, m):
                for _ in range(k):
                    t = t * v
            total = total + t * c if c != 1 else total + t
        return total

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def render(self, names=None) -> str:
        names = names or [f"[w{i + 1}]" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[m]
            factors = []
            for i, k in enumerate(m):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Poly({self.render()})"


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_poly(text: str, nvars: int) -> Poly:
    """Parse the output of :meth:`Poly.render`; used by tests and fixtures."""
    out = Poly(nvars)
    for sign, body in _TERM.findall(text.replace(" ", "")):
        coef, e = 1, [0] * nvars
        for fac in body.split("*"):
            if fac.isdigit():
                coef *= int(fac)
                continue
            m = re.fullmatch(r"\[w(\d+)\](?:\^(\d+))?", fac)
            if not m:
                raise ValueError(f"bad factor {fac!r}")
            e[int(m.group(1)) - 1] += int(m.group(2) or 1)
        out = out + Poly(nvars, {tuple(e): -coef if sign == "-" else coef})
    return out
