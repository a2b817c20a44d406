"""Universal supersingularity sequences over F_q[T] and F_q[T, 1/T].

u_{-1} = 0, u_0 = 1 and

    u_{i+1} = (s + T^q)^(q^i) * u_i - (T^(q^i) - T) * s^(q^i) * u_{i-1}

over A[s] with A = F_q[T].  The normalized variant runs over A[1/T][s]:
U_0 = 1 and

    U_{i+1} = ((s^q - s)^(q-1) + 1/T^(q-1))^(q^i) * U_i
              - (T^(q^i) - T)/T^(q^(i+1)) * (s^q - s)^((q-1)*q^(i-1)) * U_{i-1}

with the second term absent at i = 0.  Reducing u_d (resp. U_d) mod a prime
p(T) of degree d yields the Deuring polynomial h (resp. its companion H).

The derivative sequence (d/ds u_i) satisfies the u-recursion for steps
i >= 1 only: the i = 0 step would force u_1' = 0, but u_1 = s + T^q has
u_1' = 1.  `check_derivative_recursion` therefore requires i >= 1.
"""

from __future__ import annotations

from .errors import DomainError
from .laurent import LaurentRing, LaurentT
from .modulus import reduce_mod_prime, t_poly_ring
from .ore import qpow
from .poly import Poly, PolyRing, exact_div, poly_gcd

_u_cache = {}
_U_cache = {}


def _require_base(field):
    if field.q != field.card:
        raise DomainError("universal sequences live over a designated base F_q")


def u_sequence(field, i_max):
    """[u_0, ..., u_{i_max}] over F_q[T][s]."""
    _require_base(field)
    if i_max < 0:
        raise DomainError("sequence index must be non-negative")
    q = field.card
    seq = _u_cache.setdefault(field, [])
    if not seq:
        A = t_poly_ring(field)
        S = PolyRing(A, "s")
        seq.append(S.one)
        seq.append(Poly(S, (A.gen ** q, A.one)))
    A = seq[0].ring.base
    S = seq[0].ring
    while len(seq) <= i_max:
        i = len(seq) - 1
        qi = q ** i
        t_high = A.gen ** (q ** (i + 1))
        term1 = seq[i].shifted(qi) + seq[i] * t_high
        t_fac = A.gen ** qi - A.gen
        term2 = seq[i - 1].shifted(qi) * t_fac
        seq.append(term1 - term2)
    return seq[:i_max + 1]


def U_sequence(field, i_max):
    """[U_0, ..., U_{i_max}] over F_q[T, 1/T][s]."""
    _require_base(field)
    if i_max < 0:
        raise DomainError("sequence index must be non-negative")
    q = field.card
    seq = _U_cache.setdefault(field, [])
    if not seq:
        A = t_poly_ring(field)
        L = LaurentRing(A)
        SL = PolyRing(L, "s")
        sq_minus_s = Poly(SL, (L.zero, -L.one) + (L.zero,) * (q - 2) + (L.one,))
        C = sq_minus_s ** (q - 1)
        U1 = C + SL.coerce(L.shift(1, q - 1))
        seq.append(SL.one)
        seq.append(U1)
        _U_cache[field] = seq
        seq_extra = {"C": C, "U1": U1}
        _U_cache[(field, "aux")] = seq_extra
    aux = _U_cache[(field, "aux")]
    C, U1 = aux["C"], aux["U1"]
    SL = seq[0].ring
    L = SL.base
    A = L.tring
    while len(seq) <= i_max:
        i = len(seq) - 1
        term1 = qpow(U1, q, i) * seq[i]
        fac = LaurentT(L, A.gen ** (q ** i) - A.gen, q ** (i + 1))
        term2 = SL.coerce(fac) * qpow(C, q, i - 1) * seq[i - 1]
        seq.append(term1 - term2)
    return seq[:i_max + 1]


def u_zero_value(field, i):
    """The closed form u_i(0) = T^(q*(q^i - 1)/(q - 1))."""
    q = field.card
    A = t_poly_ring(field)
    return A.gen ** (q * (q ** i - 1) // (q - 1))


def check_u_zero(field, i):
    u = u_sequence(field, i)[i]
    return u.constant_coeff() == u_zero_value(field, i)


def check_derivative_recursion(field, i):
    """The derivative sequence satisfies the unchanged recursion at step i >= 1."""
    if i < 1:
        raise DomainError("the derivative recursion only holds for steps i >= 1")
    q = field.card
    seq = u_sequence(field, i + 1)
    A = seq[0].ring.base
    qi = q ** i
    du_next = seq[i + 1].derivative()
    du_i = seq[i].derivative()
    du_prev = seq[i - 1].derivative()
    t_high = A.gen ** (q ** (i + 1))
    rhs = (du_i.shifted(qi) + du_i * t_high) \
        - du_prev.shifted(qi) * (A.gen ** qi - A.gen)
    return du_next == rhs


def check_key_identity(field, i):
    """Substitution identity linking u_i at -T^q*s*(s+1)^(q-1) and -T*s^q/(s+1)^(q-1).

    Both sides are multiplied by (s+1)^((q-1)*deg u_i) to clear denominators;
    the identity then reads, with N = deg u_i and N' = deg u_{i-1}:

    P1*(s+1)^((q-1)N) - T^(q^i - 1)*(s+1)^(q^i - 1)*P2
        = -(T^(q^i) - T) * T^(q^i - 1) * (s+1)^(q^i - 1) * (s+1)^(q^i - q^(i-1)) * P2'

    where P1 is the plain substitution and P2 (resp. P2') is the cleared form
    sum_j c_j * (-T*s^q)^j * (s+1)^((q-1)(N-j)) of u_i (resp. u_{i-1}).
    """
    if i < 0:
        raise DomainError("the substitution identity needs i >= 0")
    if i == 0:
        # u_0 = 1, u_{-1} = 0: both sides collapse to 1 - 1 = 0 = -0
        return True
    q = field.card
    seq = u_sequence(field, i)
    ui, um = seq[i], seq[i - 1]
    A = ui.ring.base
    S = ui.ring
    T = A.gen
    s_plus_1 = Poly(S, (A.one, A.one))
    arg1 = Poly(S, (A.zero, -(T ** q))) * s_plus_1 ** (q - 1)
    P1 = ui(arg1)
    neg_t_sq = Poly(S, (A.zero,) * q + (-T,))

    def cleared_direct(u):
        n = u.degree
        b = s_plus_1 ** (q - 1)
        apow = S.one
        bpows = [S.one]
        for _ in range(n):
            bpows.append(bpows[-1] * b)
        acc = S.zero
        for j in range(n + 1):
            c = u.coeff(j)
            if c:
                acc = acc + apow * bpows[n - j] * c
            if j < n:
                apow = apow * neg_t_sq
        return acc

    P2 = cleared_direct(ui)
    P2m = cleared_direct(um)
    N = ui.degree
    qi = q ** i
    lhs = P1 * s_plus_1 ** ((q - 1) * N) \
        - P2 * s_plus_1 ** (qi - 1) * (T ** (qi - 1))
    rhs = -(P2m * s_plus_1 ** (qi - 1 + qi - q ** (i - 1))
            * ((T ** qi - T) * T ** (qi - 1)))
    return lhs == rhs


def sequence_json(field, variant, i_max):
    """JSON payload for u_0..u_{i_max} ("u") or U_0..U_{i_max} ("U").

    Each entry is the descending list of s-coefficients as grammar strings;
    the identically-zero i = -1 seed is omitted.
    """
    from . import grammar

    if variant == "u":
        seq = u_sequence(field, i_max)
    elif variant == "U":
        seq = U_sequence(field, i_max)
    else:
        raise DomainError(f"unknown sequence variant {variant!r}")
    return {
        "q": field.card,
        "variant": variant,
        "i_max": i_max,
        "entries": [[grammar.render(c) for c in reversed(f.coeffs)]
                    for f in seq],
    }


def check_simple_roots(prime):
    """u_d mod p is separable and does not vanish at 0."""
    h = reduce_mod_prime(u_sequence(prime.field_q, prime.d)[prime.d], prime)
    if not h.constant_coeff():
        return False
    return poly_gcd(h, h.derivative()).degree == 0


def check_simple_roots_generic(field, i):
    """gcd(u_i, d/ds u_i) = 1 over F_q(T), via a primitive remainder sequence."""
    u = u_sequence(field, i)[i]
    return _coprime_over_fraction_field(u, u.derivative())


def _content(f):
    cs = [c for c in f.coeffs if c]
    g = cs[0]
    for c in cs[1:]:
        g = poly_gcd(g, c)
        if g.degree == 0:
            break
    return g


def _primitive(f):
    c = _content(f)
    if c.degree == 0 and c.lead == c.ring.base.one:
        return f
    return f.map_coeffs(lambda x: exact_div(x, c), f.ring)


def _pseudo_rem(f, g):
    lc = g.lead
    while f and f.degree >= g.degree:
        f = f * lc - g.shifted(f.degree - g.degree) * f.lead
    return f


def _coprime_over_fraction_field(f, g):
    if not g:
        return f.degree == 0
    f, g = _primitive(f), _primitive(g)
    while True:
        if g.degree == 0:
            return True
        r = _pseudo_rem(f, g)
        if not r:
            return False
        f, g = g, _primitive(r)
