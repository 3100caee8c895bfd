"""Parser for element strings.

Grammar::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)*
    atom   := INT | 'eta' | 'mu' | 'beta' | '[w' I ']' | 'dR(' I ')' | 'dH(' I ')'
            | 'lam' K | 'dG(' I ')' | 'r(' expr ')' | '(' expr ')'

Products of ``[wI]`` atoms are evaluated in R(G) first and become KR classes
only when combined with another kind of atom (or at the end): real-type
irreducibles in degree 0, quaternionic ones in degree -4 and conjugate pairs
as ``r(z)``.  Inside ``r(...)`` everything is evaluated in
``Omega (x) K*(+)``, where ``beta`` and ``dG(I)`` are allowed and KR atoms
are replaced by their complexifications.
"""
from __future__ import annotations

import re

from .charalg import RepType, conj_hw, poly_decomposition
from .coeff import CoeffElement, is_canonical, rep_type
from .errors import ParseError
from .krgring import (DH, DR, LAM, KRGElement, complexify_generator, conj_star_form,
                      generator_data, realify_form)
from .omega import DifferentialForm, wedge
from .poly import Poly

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<w>\[w(?P<wi>\d+)\])
  | (?P<gen>(?P<gk>dR|dH|dG)\((?P<gi>\d+)\))
  | (?P<lam>lam(?P<li>\d+))
  | (?P<rop>r\()
  | (?P<name>eta|mu|beta)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


def tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", pos, text)
        if m.group("ws") is None:
            if m.group("int") is not None:
                out.append(("int", int(m.group("int")), pos))
            elif m.group("w") is not None:
                out.append(("w", int(m.group("wi")), pos))
            elif m.group("gen") is not None:
                out.append((m.group("gk"), int(m.group("gi")), pos))
            elif m.group("lam") is not None:
                out.append(("lam", int(m.group("li")), pos))
            elif m.group("rop") is not None:
                out.append(("r(", None, pos))
            elif m.group("name") is not None:
                out.append((m.group("name"), None, pos))
            else:
                out.append((m.group("op"), None, pos))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def poly_to_krg(spec, p: Poly) -> KRGElement:
    """Read an R(G) polynomial as a Real class, each irreducible in its own degree."""
    rep = poly_decomposition(spec, p)
    out = CoeffElement(spec)
    for hw, m in rep.items():
        t = rep_type(spec, hw)
        if t is RepType.C:
            if rep.get(conj_hw(spec, hw), 0) != m:
                raise ParseError("class is not invariant under the involution")
            if is_canonical(spec, hw):
                out = out + CoeffElement.r_term(spec, hw, 0, m)
        else:
            out = out + CoeffElement.symbol(spec, hw, c=m)
    return KRGElement.coefficient(out)


class _Parser:
    def __init__(self, spec, text):
        self.spec = spec
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.nf = len(spec.fundamentals)

    @property
    def gd(self):
        # only generator atoms need this; coefficient-only input works for any group
        return generator_data(self.spec)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}", tok[2], self.text)
        self.i += 1
        return tok

    def fail(self, msg, tok):
        raise ParseError(msg, tok[2], self.text)

    # value helpers -------------------------------------------------------
    def to_krg(self, v):
        return poly_to_krg(self.spec, v) if isinstance(v, Poly) else v

    def add(self, a, b, sign):
        if isinstance(a, Poly) and isinstance(b, Poly):
            return a + b * sign
        if isinstance(a, DifferentialForm):
            return a + b * sign
        return self.to_krg(a) + self.to_krg(b) * sign

    def mul(self, a, b):
        if isinstance(a, Poly) and isinstance(b, Poly):
            return a * b
        if isinstance(a, DifferentialForm):
            return wedge(a, b)
        return self.to_krg(a) * self.to_krg(b)

    # grammar -------------------------------------------------------------
    def parse(self):
        v = self.expr(False)
        tok = self.peek()
        if tok[0] != "end":
            self.fail("unexpected token", tok)
        return self.to_krg(v)

    def expr(self, cworld):
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        v = self.term(cworld)
        if sign < 0:
            v = v * -1
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            v = self.add(v, self.term(cworld), 1 if op == "+" else -1)
        return v

    def term(self, cworld):
        factors = [self.factor(cworld)]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor(cworld))
        # degree-0 R(G) factors commute with everything, so collect them
        # first: [w1]*eta*[w2] must see the invariant product [w1]*[w2]
        polys = [f for f in factors if isinstance(f, Poly)]
        rest = [f for f in factors if not isinstance(f, Poly)]
        v = polys[0] if polys else None
        for f in polys[1:]:
            v = v * f
        for f in rest:
            v = f if v is None else self.mul(v, f)
        return v

    def factor(self, cworld):
        v = self.atom(cworld)
        while self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a non-negative integer", tok)
            base, k = v, tok[1]
            v = self.one(cworld)
            for _ in range(k):
                v = self.mul(v, base)
        return v

    def one(self, cworld):
        if cworld:
            return DifferentialForm.scalar(self.spec, 1)
        return Poly.const(self.nf)

    def fundamental(self, tok):
        idx = tok[1] - 1
        if not 0 <= idx < self.nf:
            self.fail(f"no fundamental representation with index {tok[1]}", tok)
        return idx

    def generator(self, tok):
        kind, idx = tok[0], tok[1] - 1
        if kind == "lam":
            if not 0 <= idx < len(self.gd.pairs):
                self.fail(f"no conjugate pair with index {tok[1]}", tok)
            return (LAM, idx)
        a = self.fundamental(tok)
        want = DR if kind == "dR" else DH
        if (want == DR and a not in self.gd.real) or (want == DH and a not in self.gd.quat):
            self.fail(f"{kind}({tok[1]}) is not a generator for this group", tok)
        return (want, a)

    def atom(self, cworld):
        tok = self.take()
        kind = tok[0]
        spec = self.spec
        if kind == "int":
            return DifferentialForm.scalar(spec, tok[1]) if cworld else Poly.const(self.nf, tok[1])
        if kind == "w":
            p = Poly.var(self.nf, self.fundamental(tok))
            return DifferentialForm.scalar(spec, p) if cworld else p
        if kind == "(":
            v = self.expr(cworld)
            self.take(")")
            return v
        if kind == "r(":
            inner = self.expr(True)
            self.take(")")
            if cworld:
                return inner + conj_star_form(inner)
            return realify_form(inner)
        if kind in ("eta", "mu"):
            if cworld:
                return DifferentialForm(spec) if kind == "eta" else DifferentialForm.scalar(spec, 2, 2)
            return KRGElement.coefficient(CoeffElement.scalar(spec, 1, kind))
        if kind in ("dR", "dH", "lam"):
            g = self.generator(tok)
            if cworld:
                return complexify_generator(spec, g)
            return KRGElement.generator(spec, g)
        if kind == "beta":
            if not cworld:
                self.fail("beta is only allowed inside r(...)", tok)
            return DifferentialForm.scalar(spec, 1, 1)
        if kind == "dG":
            if not cworld:
                self.fail("dG(I) is only allowed inside r(...)", tok)
            return DifferentialForm.d(spec, self.fundamental(tok))
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {kind!r}", tok)


def parse_element(spec, text: str) -> KRGElement:
    try:
        return _Parser(spec, text).parse()
    except ParseError as e:
        if e.text is None:
            raise ParseError(str(e), 0, text) from None
        raise
