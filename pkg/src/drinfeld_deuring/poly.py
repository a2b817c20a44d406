"""Dense univariate polynomials over an arbitrary coefficient ring.

Coefficients are stored as a normalized ascending tuple (no trailing zeros).
The coefficient ring is described by a small object with `zero`, `one` and
`coerce`; coefficient elements do their own arithmetic through operators.
Division requires invertible leading coefficients, i.e. field coefficients.
"""

from __future__ import annotations

from .errors import CapExceededError, DomainError

CARD_CAP = 1 << 16


class PolyRing:
    def __init__(self, base, var):
        self.base = base
        self.var = var
        self.zero = Poly(self, ())
        self.one = Poly(self, (base.coerce(1),))
        self.gen = Poly(self, (base.coerce(0), base.coerce(1)))
        self._hash = hash(("PolyRing", hash(base), var))

    def const(self, c):
        return Poly(self, (self.base.coerce(c),))

    def coerce(self, v):
        if isinstance(v, Poly):
            if v.ring == self:
                return v
            # allow a polynomial from the base ring as a constant
            c = self.base.coerce(v)
            return Poly(self, (c,))
        return Poly(self, (self.base.coerce(v),))

    def poly(self, coeffs):
        """Build a polynomial from ascending coefficients, coercing each."""
        return Poly(self, tuple(self.base.coerce(c) for c in coeffs))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self.var == other.var and self.base == other.base

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.ring = ring
        self.coeffs = coeffs[:n]

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_coeff(self):
        return self.coeffs[0] if self.coeffs else self.ring.base.zero

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.base.zero

    def _coerce_other(self, other):
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        try:
            return self.ring.coerce(other)
        except DomainError:
            return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, tuple(-c for c in self.coeffs))

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
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self.ring.zero
        if len(b) == 1:
            c = b[0]
            return Poly(self.ring, tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return Poly(self.ring, tuple(c * x for x in b))
        zero = self.ring.base.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise DomainError("polynomial powers must be non-negative integers")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        try:
            lc_inv = o.lead.inverse()
        except AttributeError:
            raise DomainError("division needs field coefficients") from None
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return self.ring.zero, self
        quot = [self.ring.base.zero] * (dq + 1)
        ob = o.coeffs
        for k in range(dq, -1, -1):
            top = rem[k + len(ob) - 1]
            if top:
                f = top * lc_inv
                quot[k] = f
                for i, c in enumerate(ob):
                    if c:
                        rem[k + i] = rem[k + i] - f * c
        return Poly(self.ring, quot), Poly(self.ring, rem[:len(ob) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        # start from the zero of x's structure so mixed coefficient/argument
        # rings coerce through the accumulator's __add__
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, ring):
        return Poly(ring, tuple(fn(c) for c in self.coeffs))

    def monic(self):
        if not self.coeffs:
            raise DomainError("zero polynomial cannot be made monic")
        lc = self.lead
        if lc == self.ring.base.one:
            return self
        inv = lc.inverse()
        return Poly(self.ring, tuple(c * inv for c in self.coeffs))

    def derivative(self):
        return Poly(self.ring,
                    tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def shifted(self, k):
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        zero = self.ring.base.zero
        return Poly(self.ring, (zero,) * k + self.coeffs)

    def __eq__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ring._hash, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        from . import grammar

        return grammar.render(self)


def poly_gcd(f, g):
    """Monic gcd by the Euclidean algorithm (field coefficients)."""
    if not f and not g:
        raise DomainError("gcd(0, 0) is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def exact_div(f, g, exc=DomainError):
    q, r = divmod(f, g)
    if r:
        raise exc(f"division of {f!r} by {g!r} leaves remainder {r!r}")
    return q


def powmod(g, e, f):
    result = g.ring.one % f
    g = g % f
    while e:
        if e & 1:
            result = (result * g) % f
        g = (g * g) % f
        e >>= 1
    return result


def is_irreducible(f):
    """Gcd-with-Frobenius irreducibility test over a finite field."""
    from .fields import FiniteField

    if not isinstance(f.ring.base, FiniteField):
        raise DomainError("irreducibility test needs finite-field coefficients")
    n = f.degree
    if n < 1:
        raise DomainError("irreducibility is undefined for constants")
    if n == 1:
        return True
    card = f.ring.base.card
    x = f.ring.gen
    # iterates x^(card^k) mod f
    ts = [x % f]
    for _ in range(n):
        ts.append(powmod(ts[-1], card, f))
    if ts[n] != ts[0]:
        return False
    for r in _prime_divisors(n):
        if poly_gcd(ts[n // r] - x, f).degree != 0:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def roots_in_extension(f, m):
    """Roots of f in the degree-m extension, with multiplicity.

    Returns a list of elements of the extension (repeats indicate multiple
    roots), ordered by element index.  The scan is exhaustive, so the
    extension must stay within the 2^16 cardinality cap.
    """
    from .fields import FiniteField, embed

    K = f.ring.base
    if not isinstance(K, FiniteField):
        raise DomainError("root search needs finite-field coefficients")
    if f.degree < 0:
        raise DomainError("root search of the zero polynomial")
    if m == 1:
        E = K
        g = f
    else:
        E = K.extension(m)
        ring = PolyRing(E, f.ring.var)
        g = f.map_coeffs(lambda c: embed(c, E), ring)
    if E.card > CARD_CAP:
        raise CapExceededError(
            f"root scan over {E.card} elements exceeds the {CARD_CAP} cap")
    simple = [x for x in E.elements() if not g(x)]
    out = []
    for r in simple:
        lin = Poly(g.ring, (-r, E.one))
        mult = 0
        while True:
            q, rem = divmod(g, lin)
            if rem:
                break
            g = q
            mult += 1
        out.extend([r] * mult)
    return out


def splitting_degree(f, max_m):
    """Smallest m <= max_m such that f splits completely in F_{q^m}."""
    from .errors import AmbientTooSmallError

    n = f.degree
    for m in range(1, max_m + 1):
        try:
            if len(roots_in_extension(f, m)) == n:
                return m
        except CapExceededError:
            break
    raise AmbientTooSmallError(
        f"{f!r} does not split within the scannable extensions", None)
