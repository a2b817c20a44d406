"""Finite-field towers: construction, arithmetic, Frobenius, embeddings."""

import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_deuring.errors import DomainError
from drinfeld_deuring.fields import base_field, embed, frobenius
from drinfeld_deuring.grammar import render


def test_prime_field_arithmetic():
    F = base_field(5)
    a, b = F.from_index(3), F.from_index(4)
    assert a + b == 2
    assert a * b == 2
    assert -a == 2
    assert a.inverse() == 2
    assert a ** 0 == 1
    assert F.zero != F.one


def test_prime_power_base_field_tower():
    F4 = base_field(4)
    assert F4.card == 4
    assert F4.p == 2
    assert F4.q == 4
    x = F4.gen
    # deterministic modulus: x^2 + x + 1
    assert x * x == x + F4.one
    assert render(x ** 2) == "x + 1"


def test_base_field_rejects_non_prime_powers():
    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(DomainError):
            base_field(bad)


def test_deterministic_extension_moduli():
    # smallest-lex searches, leading coefficients varying slowest
    F3 = base_field(3)
    F9 = F3.extension(2)
    z = F9.gen
    assert z * z == -F9.one  # z^2 + 1
    F2 = base_field(2)
    F8 = F2.extension(3)
    w = F8.gen
    assert w ** 3 == w + F8.one  # w^3 + w + 1


def test_structural_field_equality():
    assert base_field(4) == base_field(2).extension(2, gen_name="x")
    assert base_field(4) == base_field(2).extension(2, gen_name="y")
    assert base_field(4) != base_field(9)
    # the Drinfeld q tag is metadata, not structure
    assert base_field(4).q == 4
    assert base_field(2).extension(2).q == 2


def test_frobenius_designated_base():
    F4 = base_field(2).extension(2)
    x = F4.gen
    assert frobenius(x, 1) == x + F4.one
    assert frobenius(x, 2) == x
    # over the q=4 base field the same element is Frobenius-fixed
    y = base_field(4).gen
    assert frobenius(y, 1) == y


def test_embed_through_tower():
    F2 = base_field(2)
    F4 = F2.extension(2)
    F16 = F4.extension(2)
    one = embed(F2.one, F16)
    assert one == F16.one
    a = embed(F4.gen, F16)
    assert a ** 2 + a == F16.one
    with pytest.raises(DomainError):
        embed(F16.gen, F4)


def test_elements_enumeration_and_coords():
    F4 = base_field(4)
    els = list(F4.elements())
    assert len(els) == 4
    assert len(set(els)) == 4
    F16 = F4.extension(2)
    for e in F16.elements():
        c0, c1 = F16.coords_over_base(e)
        assert F16.embed_from_base(c0) + F16.embed_from_base(c1) * F16.gen == e


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2), (4, 2), (5, 1)])
def test_frobenius_additivity_exhaustive(q, m):
    """(x + y)^q = x^q + y^q for every pair, cardinality <= 256."""
    K = base_field(q)
    E = K.extension(m) if m > 1 else K
    assert E.card <= 256
    els = list(E.elements())
    for x in els:
        for y in els:
            assert (x + y) ** q == x ** q + y ** q


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_field_ring_axioms_f27(i, j, k):
    F = base_field(3).extension(3)
    x, y, z = F.from_index(i), F.from_index(j), F.from_index(k)
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)
    assert x * (y * z) == (x * y) * z
    assert x + y == y + x
    assert x * y == y * x


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 48))
def test_inverse_and_power_consistency(i):
    F = base_field(7).extension(2)
    x = F.from_index(i)
    assert x * x.inverse() == F.one
    assert x ** (F.card - 1) == F.one
    assert x ** -1 == x.inverse()
