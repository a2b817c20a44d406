"""Laurent polynomials in T: values num / T^k with num a polynomial in T.

Normal form keeps T from dividing the numerator (and k = 0 when num = 0), so
equality is structural.  k may be negative, which just means a plain
polynomial multiple of a T-power.  Only the ring operations the U-sequence
recurrence needs are provided; there is no general division.
"""

from __future__ import annotations

from .errors import DomainError
from .poly import Poly


class LaurentRing:
    def __init__(self, tring):
        self.tring = tring
        self.zero = LaurentT(self, tring.zero, 0)
        self.one = LaurentT(self, tring.one, 0)
        self._hash = hash(("LaurentRing", hash(tring)))

    def coerce(self, v):
        if isinstance(v, LaurentT):
            if v.ring == self:
                return v
            raise DomainError("Laurent value from a different ring")
        if isinstance(v, Poly) and v.ring == self.tring:
            return LaurentT(self, v, 0)
        return LaurentT(self, self.tring.coerce(v), 0)

    def shift(self, num, k):
        """The value num / T^k."""
        return LaurentT(self, self.tring.coerce(num), k)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LaurentRing):
            return NotImplemented
        return self.tring == other.tring

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.tring!r}[1/{self.tring.var}]"


class LaurentT:
    __slots__ = ("ring", "num", "k")

    def __init__(self, ring, num, k):
        if not num:
            num, k = ring.tring.zero, 0
        else:
            val = 0
            cs = num.coeffs
            while not cs[val]:
                val += 1
            if val:
                num = Poly(num.ring, cs[val:])
                k -= val
        self.ring = ring
        self.num = num
        self.k = k

    def _coerce_other(self, other):
        try:
            return self.ring.coerce(other)
        except DomainError:
            return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        k = max(self.k, o.k)
        a = self.num.shifted(k - self.k)
        b = o.num.shifted(k - o.k)
        return LaurentT(self.ring, a + b, k)

    __radd__ = __add__

    def __neg__(self):
        return LaurentT(self.ring, -self.num, self.k)

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
        return LaurentT(self.ring, self.num * o.num, self.k + o.k)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e >= 0:
            return LaurentT(self.ring, self.num ** e, self.k * e)
        if self.num.degree != 0:
            raise DomainError("negative power of a non-unit Laurent value")
        c = self.num.coeffs[0] ** e
        return LaurentT(self.ring, Poly(self.num.ring, (c,)), self.k * e)

    def __eq__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.k == o.k and self.num == o.num

    def __hash__(self):
        return hash((self.ring._hash, self.num, self.k))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        from . import grammar

        return grammar.render(self)
