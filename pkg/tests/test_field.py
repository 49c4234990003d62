import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from secantdesigns.field import GF8, Field, ZeroInverseError, is_irreducible

Q = 8
ELEMS = range(Q)
nonzero = st.integers(1, Q - 1)
elem = st.integers(0, Q - 1)


def clmul_mod(a, b, modulus=0b1011, degree=3):
    """Schoolbook carry-less product reduced mod the modulus; no tables."""
    r = 0
    for i in range(degree):
        if b >> i & 1:
            r ^= a << i
    for i in range(2 * degree - 2, degree - 1, -1):
        if r >> i & 1:
            r ^= modulus << (i - degree)
    return r


def test_multiplication_matches_schoolbook():
    for a, b in itertools.product(ELEMS, ELEMS):
        assert GF8.mul(a, b) == clmul_mod(a, b)


def test_axioms_exhaustive():
    F = GF8
    for a, b, c in itertools.product(ELEMS, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a, b in itertools.product(ELEMS, ELEMS):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a in ELEMS:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, a) == 0  # characteristic 2
        if a:
            assert F.mul(a, F.inv(a)) == 1


def test_frobenius_is_an_automorphism_of_order_three():
    F = GF8
    for a, b in itertools.product(ELEMS, ELEMS):
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    assert sorted(F.frobenius(a) for a in ELEMS) == list(ELEMS)
    assert all(F.frobenius(a, 3) == a for a in ELEMS)
    assert [a for a in ELEMS if F.frobenius(a) == a] == [0, 1]


def test_primitive_element_generates_the_multiplicative_group():
    w = GF8.primitive_element()
    assert {GF8.pow(w, e) for e in range(7)} == set(range(1, 8))


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverseError):
        GF8.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF8.div(3, 0)


def test_out_of_range_element_rejected():
    with pytest.raises(ValueError):
        GF8.mul(8, 1)


def test_irreducibility():
    assert is_irreducible(0b1011) and is_irreducible(0b1101)
    assert not is_irreducible(0b1001)   # x^3+1 = (x+1)(x^2+x+1)
    with pytest.raises(ValueError):
        Field(3, 0b1001)


def test_other_small_field():
    F = Field(4, 0b10011)
    assert F.order == 16
    assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 16))


@given(nonzero, st.integers(-20, 20), st.integers(-20, 20))
def test_power_laws(a, m, n):
    F = GF8
    assert F.mul(F.pow(a, m), F.pow(a, n)) == F.pow(a, m + n)
    assert F.pow(a, 7) == 1


@given(elem, nonzero)
def test_division_inverts_multiplication(a, b):
    assert GF8.mul(GF8.div(a, b), b) == a
