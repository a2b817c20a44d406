"""Sparse multivariate polynomials and fractions over a finite field.

Terms live in a dict keyed by exponent tuples (one slot per variable, in the
ring's fixed name order); values are nonzero field elements.  Term order for
rendering is graded lexicographic, comparing total degree first and then the
exponent tuple left to right.  Fractions compare by cross-multiplication and
never reduce, which is fine at the desk scales of the tower identities.
"""

from __future__ import annotations

from .errors import DomainError
from .fields import FieldElement


class MultiRing:
    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.zero = MultiPoly(self, {})
        zero_exp = (0,) * self.nvars
        self.one = MultiPoly(self, {zero_exp: field.one})
        self._hash = hash(("MultiRing", field._hash, self.names))

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = tuple(1 if j == i else 0 for j in range(self.nvars))
            out.append(MultiPoly(self, {e: self.field.one}))
        return tuple(out)

    def const(self, c):
        c = self.field.coerce(c)
        if not c:
            return self.zero
        return MultiPoly(self, {(0,) * self.nvars: c})

    def coerce(self, v):
        if isinstance(v, MultiPoly):
            if v.ring == self:
                return v
            raise DomainError("multivariate value from a different ring")
        return self.const(v)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, MultiRing):
            return NotImplemented
        return self.field == other.field and self.names == other.names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    def _coerce_other(self, other):
        try:
            return self.ring.coerce(other)
        except DomainError:
            return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError("multivariate powers must be non-negative integers")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def degree(self, var=None):
        """Total degree, or degree in one named variable; -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.names.index(var)
        return max(e[i] for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def evaluate(self, values):
        """Substitute a value (element, MultiPoly or Frac) for every variable."""
        missing = [n for n in self.ring.names if n not in values]
        if missing:
            raise DomainError(f"no value supplied for {missing}")
        acc = None
        for e, c in self.terms.items():
            term = None
            for name, exp in zip(self.ring.names, e):
                if exp:
                    f = values[name] ** exp
                    term = f if term is None else term * f
            term = c if term is None else term * c
            acc = term if acc is None else acc + term
        if acc is None:
            first = next(iter(values.values()))
            return first * 0
        return acc

    def __eq__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from . import grammar

        return grammar.render(self)


class Frac:
    """num/den over a MultiRing, with cross-multiplication equality."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        if not den:
            raise ZeroDivisionError("fraction with zero denominator")
        self.num = num
        self.den = den

    def _coerce_other(self, other):
        if isinstance(other, Frac):
            return other
        if isinstance(other, (MultiPoly, FieldElement, int)):
            try:
                return Frac(self.num.ring.coerce(other))
            except DomainError:
                return None
        return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return Frac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by the zero fraction")
        return Frac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e >= 0:
            return Frac(self.num ** e, self.den ** e)
        if not self.num:
            raise ZeroDivisionError("negative power of the zero fraction")
        return Frac(self.den ** (-e), self.num ** (-e))

    def __eq__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"
