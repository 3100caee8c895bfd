"""Exterior forms over R(G) and their Bott-periodic extension.

A :class:`DifferentialForm` maps ``(mono, i)`` to a :class:`Poly` in the
fundamental classes, where ``mono`` is a strictly increasing tuple of
fundamental indices (the wedge ``d rho_a ^ d rho_b ^ ...``) and ``beta^i``
is a Bott factor with ``i`` mod 4.  Forms without ``beta`` are elements of
``K*_G(G)``; with ``beta`` they live in ``K*_G(G) (x) K*(+)``.
"""
from __future__ import annotations

from collections import defaultdict

from .charalg import fundamental_permutation, irrep_character
from .errors import MixedGroup
from .poly import Poly


def sort_sign(seq):
    """Sign of the permutation sorting ``seq`` and the sorted tuple (None if repeated)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign, tuple(sorted(seq))


class DifferentialForm:
    __slots__ = ("spec", "nvars", "terms")

    def __init__(self, spec, terms=None):
        self.spec = spec
        self.nvars = len(spec.fundamentals)
        out = {}
        for (mono, i), p in (terms or {}).items():
            key = (tuple(mono), i % 4)
            out[key] = out[key] + p if key in out else p
        self.terms = {k: p for k, p in out.items() if p}

    @classmethod
    def scalar(cls, spec, p, i=0):
        if isinstance(p, int):
            p = Poly.const(len(spec.fundamentals), p)
        return cls(spec, {((), i): p})

    @classmethod
    def d(cls, spec, index, p=None, i=0):
        """``p * d rho_index * beta^i``."""
        nf = len(spec.fundamentals)
        return cls(spec, {((index,), i): p if p is not None else Poly.const(nf)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = DifferentialForm.scalar(self.spec, other)
        return isinstance(other, DifferentialForm) and self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _check(self, other):
        if self.spec != other.spec:
            raise MixedGroup(f"cannot combine forms on {self.spec} and {other.spec}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = out[k] + p if k in out else p
        return DifferentialForm(self.spec, out)

    def __neg__(self):
        return DifferentialForm(self.spec, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DifferentialForm(self.spec, {k: p * other for k, p in self.terms.items()})
        if isinstance(other, Poly):
            return DifferentialForm(self.spec, {k: p * other for k, p in self.terms.items()})
        return wedge(self, other)

    __rmul__ = __mul__

    def shift(self, j):
        return DifferentialForm(self.spec, {(m, i + j): p for (m, i), p in self.terms.items()})

    def degrees(self):
        return {(-len(m) - 2 * i) % 8 for (m, i) in self.terms}

    def form_degrees(self):
        return {len(m) for (m, _) in self.terms}

    def render(self, style="wedge") -> str:
        """``wedge``: ``(p)·d[w1]^d[w3]``; ``expr``: ``(p)*beta*dG(1)*dG(3)``."""
        if not self.terms:
            return "0"
        parts = []
        for (m, i) in sorted(self.terms, key=lambda k: (len(k[0]), k[0], k[1])):
            p = self.terms[(m, i)]
            if style == "wedge":
                factors = ["d[w%d]" % (a + 1) for a in m]
                tail = "^".join(factors)
                if i:
                    tail = "beta^%d" % i + ("·" + tail if tail else "")
                if not tail:
                    parts.append(f"({p.render()})")
                else:
                    parts.append(f"({p.render()})·{tail}")
            else:
                factors = (["beta" if i == 1 else f"beta^{i}"] if i else []) + ["dG(%d)" % (a + 1) for a in m]
                ptxt = p.render()
                if not factors:
                    parts.append(f"({ptxt})")
                elif ptxt == "1":
                    parts.append("*".join(factors))
                else:
                    parts.append(f"({ptxt})*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"DifferentialForm({self.render()})"


def wedge(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    a._check(b)
    out = defaultdict(lambda: Poly(a.nvars))
    for (m1, i1), p1 in a.terms.items():
        for (m2, i2), p2 in b.terms.items():
            sign, mono = sort_sign(m1 + m2)
            if not sign:
                continue
            key = (mono, (i1 + i2) % 4)
            out[key] = out[key] + p1 * p2 * sign
    return DifferentialForm(a.spec, dict(out))


def delta_G(spec, p: Poly) -> DifferentialForm:
    """Formal differential ``sum_i dp/d rho_i d rho_i``."""
    return DifferentialForm(spec, {((i,), 0): p.diff(i) for i in range(len(spec.fundamentals))})


def fundamental_dims(spec):
    return [irrep_character(spec, w).dim for w in spec.fundamentals]


def augment(a: DifferentialForm) -> DifferentialForm:
    """Evaluate every coefficient at the dimensions of the fundamentals."""
    dims = fundamental_dims(a.spec)
    nf = a.nvars
    return DifferentialForm(a.spec, {k: Poly.const(nf, p.evaluate(dims)) for k, p in a.terms.items()})


def conj_star(a: DifferentialForm) -> DifferentialForm:
    """Apply ``sigma-bar*``: permute classes and differentials, ``beta -> -beta``."""
    perm = fundamental_permutation(a.spec)
    out = defaultdict(lambda: Poly(a.nvars))
    for (m, i), p in a.terms.items():
        sign, mono = sort_sign([perm[x] for x in m])
        key = (mono, i)
        out[key] = out[key] + p.permute(perm) * (sign * (-1) ** i)
    return DifferentialForm(a.spec, dict(out))
