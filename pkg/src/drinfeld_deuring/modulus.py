"""Prime ideals of F_q[T] and reduction to the residue field kappa.

A PrimeModulus wraps a monic irreducible p(T) != T over the designated base
field F_q.  Its residue field kappa = F_q[T]/(p) is built as a field extension
whose defining modulus is p itself, so the extension generator `a` is exactly
the image of T, and reduction mod p is evaluation at `a`.
"""

from __future__ import annotations

from . import poly as poly_mod
from .errors import DomainError
from .fields import FieldElement, FiniteField
from .laurent import LaurentRing, LaurentT
from .poly import Poly, PolyRing


class PrimeModulus:
    def __init__(self, p):
        if not isinstance(p, Poly) or not isinstance(p.ring.base, FiniteField):
            raise DomainError("a prime modulus must be a polynomial over F_q")
        base = p.ring.base
        if base.q != base.card:
            raise DomainError("prime moduli live over a designated base field F_q")
        if p.degree < 1:
            raise DomainError("a prime modulus must have positive degree")
        p = p.monic()
        if p.coeffs == p.ring.gen.coeffs:
            raise DomainError("the prime T is excluded (gamma(T) must be a unit)")
        if not poly_mod.is_irreducible(p):
            raise DomainError(f"{p!r} is not irreducible over F_{base.card}")
        self.p_poly = p
        self.field_q = base
        self.q = base.card
        self.d = p.degree
        self.kappa = base.extension_with_modulus(p.coeffs, gen_name="a")
        self.alpha = self.kappa.gen

    def gamma(self, f):
        """Reduce a polynomial in T (or a base-field element) into kappa."""
        if isinstance(f, FieldElement):
            return self.kappa.embed_from_base(self.field_q.coerce(f))
        if not (isinstance(f, Poly) and f.ring == self.p_poly.ring):
            raise DomainError("gamma expects a polynomial over the same F_q[T]")
        acc = self.kappa.zero
        emb = self.kappa.embed_from_base
        for c in reversed(f.coeffs):
            acc = acc * self.alpha + emb(c)
        return acc

    def __eq__(self, other):
        if not isinstance(other, PrimeModulus):
            return NotImplemented
        return self.p_poly == other.p_poly and self.field_q == other.field_q

    def __hash__(self):
        return hash(("PrimeModulus", self.p_poly))

    def __repr__(self):
        return f"({self.p_poly!r}) over F_{self.q}"


def reduce_mod_prime(f, p):
    """Reduce coefficients mod p: F_q[T] -> kappa and 1/T -> alpha^(-1).

    Accepts a polynomial whose coefficients are polynomials in T or Laurent
    values in T, and returns the polynomial over kappa; a bare T-polynomial
    reduces to a kappa element.
    """
    if isinstance(f, Poly) and f.ring == p.p_poly.ring:
        return p.gamma(f)
    if not isinstance(f, Poly):
        raise DomainError("reduce_mod_prime expects a polynomial")
    base = f.ring.base
    out_ring = PolyRing(p.kappa, f.ring.var)
    if isinstance(base, PolyRing) and base == p.p_poly.ring:
        return f.map_coeffs(p.gamma, out_ring)
    if isinstance(base, LaurentRing) and base.tring == p.p_poly.ring:
        def red(c):
            return p.gamma(c.num) * p.alpha ** (-c.k)

        return f.map_coeffs(red, out_ring)
    raise DomainError(f"cannot reduce coefficients from {base!r} mod {p!r}")


def t_poly_ring(field):
    """The polynomial ring F_q[T] over a designated base field."""
    return PolyRing(field, "T")


def primes_of_degree(field, d):
    """All monic irreducible p(T) != T of degree d, in deterministic order.

    Order is lexicographic on the coefficient tuple read from the leading end
    down, comparing base-field elements by index.
    """
    if d < 1:
        raise DomainError("prime degree must be positive")
    ring = t_poly_ring(field)
    n = field.card
    for idx in range(n ** d):
        digits = []
        m = idx
        for _ in range(d):
            m, r = divmod(m, n)
            digits.append(r)
        coeffs = [field.from_index(c) for c in digits]
        coeffs.append(field.one)
        f = Poly(ring, coeffs)
        if f.coeffs == ring.gen.coeffs:
            continue
        if poly_mod.is_irreducible(f):
            yield PrimeModulus(f)


def primes_up_to_degree(field, dmax):
    for d in range(1, dmax + 1):
        yield from primes_of_degree(field, d)
