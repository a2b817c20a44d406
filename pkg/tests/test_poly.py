"""Univariate polynomial layer: division, gcd, irreducibility, root scans."""

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_deuring.errors import AmbientTooSmallError, DomainError
from drinfeld_deuring.fields import base_field, embed
from drinfeld_deuring.grammar import parse, render
from drinfeld_deuring.poly import (
    Poly, PolyRing, exact_div, is_irreducible, poly_gcd, roots_in_extension,
    splitting_degree,
)


def _ring(q, var="T"):
    return PolyRing(base_field(q), var)


def test_divmod_and_exact_division():
    R = _ring(2)
    f = parse("T^3 + T + 1", R)
    g = parse("T + 1", R)
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.degree == 0
    h = f * g
    assert exact_div(h, g) == f
    with pytest.raises(DomainError):
        exact_div(f, g)


def test_poly_gcd_examples():
    R = _ring(2)
    f = parse("T^2 + T", R)     # T(T+1)
    g = parse("T^2 + 1", R)     # (T+1)^2
    assert render(poly_gcd(f, g)) == "T + 1"
    assert poly_gcd(f, R.zero) == f.monic()
    with pytest.raises(DomainError):
        poly_gcd(R.zero, R.zero)


def test_is_irreducible_examples():
    R2 = _ring(2)
    assert is_irreducible(parse("T^2 + T + 1", R2))
    assert not is_irreducible(parse("T^2 + 1", R2))
    R3 = _ring(3)
    assert is_irreducible(parse("T^2 + 1", R3))
    with pytest.raises(DomainError):
        is_irreducible(R2.one)


def test_roots_in_extension_examples():
    F2 = base_field(2)
    S = PolyRing(F2, "s")
    f = parse("s^2 + s", S)
    assert sorted(r.index for r in roots_in_extension(f, 1)) == [0, 1]
    g = parse("s^2 + s + 1", S)
    assert roots_in_extension(g, 1) == []
    roots = roots_in_extension(g, 2)
    F4 = F2.extension(2)
    assert len(roots) == 2
    assert {render(r) for r in roots} == {"b", "b + 1"}
    assert all(r.field == F4 for r in roots)


def test_roots_multiplicity():
    R = _ring(3)
    f = parse("T + 1", R) ** 2 * parse("T + 2", R)
    roots = roots_in_extension(f, 1)
    assert len(roots) == 3  # double root counted twice
    assert sorted((-r).index for r in roots) == [1, 1, 2]


def test_splitting_degree():
    S = PolyRing(base_field(2), "s")
    assert splitting_degree(parse("s^2 + s", S), 4) == 1
    assert splitting_degree(parse("s^2 + s + 1", S), 4) == 2
    with pytest.raises(AmbientTooSmallError):
        splitting_degree(parse("s^2 + s + 1", S), 1)


def test_derivative_and_evaluation():
    R = _ring(3)
    f = parse("T^4 + 2*T^3 + T + 1", R)
    assert render(f.derivative()) == "T^3 + 1"
    x = base_field(3).from_index(2)
    assert f(x) == sum((f.coeff(i) * x ** i for i in range(5)),
                       base_field(3).zero)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=6),
       st.lists(st.integers(0, 8), min_size=1, max_size=6))
def test_poly_ring_commutes_with_evaluation(cs, ds):
    F = base_field(9)
    R = PolyRing(F, "T")
    f = R.poly([F.from_index(c) for c in cs])
    g = R.poly([F.from_index(d) for d in ds])
    x = F.from_index(5)
    assert (f * g)(x) == f(x) * g(x)
    assert (f + g)(x) == f(x) + g(x)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=2, max_size=7),
       st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_divmod_roundtrip_property(cs, ds):
    R = _ring(5)
    F = R.base
    f = R.poly([F.from_index(c) for c in cs])
    g = R.poly([F.from_index(d) for d in ds])
    if not g:
        return
    quo, rem = divmod(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree
