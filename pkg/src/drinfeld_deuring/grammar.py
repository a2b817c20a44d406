"""Canonical text form for ring values, and a parser for the same grammar.

Rendering: a value is a sum of terms joined by " + ", each term
"coeff*V^e" with the exponent part dropped when e = 1, the "^e" dropped
when e = 1, the coefficient dropped when it is 1 (unless the term is
constant), and coefficients that are themselves sums wrapped in
parentheses.  Terms are ordered by descending degree (graded
lexicographic for multivariate values).  Field elements render as
polynomials in their tower generators (x for the base field, a for the
residue field, b for further extensions); prime-field elements render as
integers.  Laurent values use explicit negative exponents like "T^-2".

Parsing accepts the rendered grammar plus binary/unary minus, so inputs
like "T-1" work.
"""

from __future__ import annotations

import re

from .errors import DomainError
from .fields import FieldElement, FiniteField, embed
from .laurent import LaurentRing, LaurentT
from .poly import Poly, PolyRing


def render(obj):
    if isinstance(obj, FieldElement):
        return _render_element(obj)
    if isinstance(obj, Poly):
        return _render_poly(obj)
    if isinstance(obj, LaurentT):
        return _render_laurent(obj)
    from . import multipoly

    if isinstance(obj, multipoly.MultiPoly):
        return _render_multi(obj)
    if isinstance(obj, int):
        return str(obj)
    raise DomainError(f"cannot render {type(obj).__name__}")


def _term(coeff_str, var, e):
    if e == 0:
        return coeff_str
    part = var if e == 1 else f"{var}^{e}"
    if coeff_str == "1":
        return part
    if " + " in coeff_str:
        coeff_str = f"({coeff_str})"
    return f"{coeff_str}*{part}"


def _render_element(x):
    f = x.field
    if f.base is None:
        return str(x.index)
    coords = f.coords_over_base(x)
    terms = []
    for j in range(len(coords) - 1, -1, -1):
        c = coords[j]
        if c:
            terms.append(_term(_render_element(c), f.gen_name, j))
    return " + ".join(terms) if terms else "0"


def _render_poly(f):
    if not f:
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c:
            terms.append(_term(render(c), f.ring.var, i))
    return " + ".join(terms)


def _render_laurent(v):
    if not v:
        return "0"
    var = v.ring.tring.var
    terms = []
    cs = v.num.coeffs
    for i in range(len(cs) - 1, -1, -1):
        if cs[i]:
            terms.append(_term(render(cs[i]), var, i - v.k))
    return " + ".join(terms)


def _render_multi(f):
    terms = f.sorted_terms()
    if not terms:
        return "0"
    out = []
    for exps, c in terms:
        parts = [_term("1", v, e)
                 for v, e in zip(f.ring.names, exps) if e]
        mono = "*".join(parts)
        cs = render(c)
        if not mono:
            out.append(cs)
        elif cs == "1":
            out.append(mono)
        else:
            if " + " in cs:
                cs = f"({cs})"
            out.append(f"{cs}*{mono}")
    return " + ".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()]))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise DomainError(f"cannot tokenize {rest[:20]!r}")
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2)))
        else:
            toks.append(("op", m.group(3)))
        pos = m.end()
    return toks


def ring_env(ring):
    """Generator names in scope for a ring, mapped to ring values."""
    if isinstance(ring, FiniteField):
        env = {}
        f = ring
        while f is not None and f.base is not None:
            if f.gen_name and f.gen_name not in env:
                env[f.gen_name] = embed(f.gen, ring)
            f = f.base
        return env
    if isinstance(ring, PolyRing):
        env = {k: ring.coerce(v) for k, v in ring_env(ring.base).items()}
        env[ring.var] = ring.gen
        return env
    if isinstance(ring, LaurentRing):
        return {k: ring.coerce(v) for k, v in ring_env(ring.tring).items()}
    from . import multipoly

    if isinstance(ring, multipoly.MultiRing):
        env = {k: ring.coerce(v) for k, v in ring_env(ring.field).items()}
        for name, gen in zip(ring.names, ring.gens()):
            env[name] = gen
        return env
    raise DomainError(f"no grammar environment for {ring!r}")


class _Parser:
    def __init__(self, toks, ring, env):
        self.toks = toks
        self.pos = 0
        self.ring = ring
        self.env = env

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise DomainError(f"expected {op!r} at token {self.pos - 1}")

    def expr(self):
        kind, val = self.peek()
        neg = False
        if kind == "op" and val in "+-":
            self.take()
            neg = val == "-"
        v = self.term()
        if neg:
            v = -v
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                v = v - t if val == "-" else v + t
            else:
                return v

    def term(self):
        v = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                v = v * self.factor()
            else:
                return v

    def factor(self):
        kind, val = self.take()
        if kind == "int":
            v = self.ring.coerce(val)
        elif kind == "name":
            if val not in self.env:
                raise DomainError(f"unknown generator {val!r}")
            v = self.env[val]
        elif kind == "op" and val == "(":
            v = self.expr()
            self.expect_op(")")
        else:
            raise DomainError(f"unexpected token {val!r}")
        kind, nxt = self.peek()
        if kind == "op" and nxt == "^":
            self.take()
            kind, e = self.take()
            sign = 1
            if kind == "op" and e == "-":
                sign = -1
                kind, e = self.take()
            if kind != "int":
                raise DomainError("exponent must be an integer")
            v = v ** (sign * e)
        return v


def parse(text, ring):
    """Parse a grammar string into a value of the given ring."""
    toks = _tokenize(text)
    if not toks:
        raise DomainError("empty expression")
    p = _Parser(toks, ring, ring_env(ring))
    v = p.expr()
    if p.pos != len(toks):
        raise DomainError(f"trailing input at token {p.pos}")
    return v
