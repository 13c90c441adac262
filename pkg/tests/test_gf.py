import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvewigner.exceptions import (
    DegreeMismatchError,
    InverseOfZeroError,
    ReduciblePolynomialError,
)
from curvewigner.gf import (
    DEFAULT_POLYS,
    Field,
    is_irreducible,
    is_self_dual,
    lin_coeffs_from_table,
    lin_compose,
    lin_eval,
    lin_scale_arg,
    lin_table,
)

from oracles import clmul_mod, smallest_self_dual_basis, trace as oracle_trace


@pytest.mark.parametrize("n", [2, 3, 4])
def test_multiplication_matches_schoolbook(n):
    field = Field(n)
    for a, b in itertools.product(field.elements(), repeat=2):
        assert field.mul(a, b) == clmul_mod(a, b, field.poly)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_trace_matches_oracle(n):
    field = Field(n)
    assert [field.trace(a) for a in field.elements()] == [oracle_trace(a, field.poly)
                                                          for a in field.elements()]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_self_dual_basis_is_lexicographically_smallest(n):
    field = Field(n)
    assert field.self_dual_basis == smallest_self_dual_basis(field.poly)


def test_gf8_frozen_values(gf8):
    s = gf8.sigma
    assert s(1) == 2 and s(3) == 3
    assert gf8.mul(s(1), s(2)) == s(3) == 0b011
    assert gf8.trace(s(1)) == 0
    assert gf8.character(s(1)) == 1
    assert gf8.self_dual_basis == (3, 5, 7)
    assert [gf8.log(t) for t in gf8.self_dual_basis] == [3, 6, 5]
    assert gf8.format(s(5), "power") == "σ^5"


def test_gf4_self_dual_basis(gf4):
    # sigma and sigma^2 in GF(4)
    assert gf4.self_dual_basis == (2, 3)
    assert gf4.mul(2, 3) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_trace_is_onto_and_balanced(n):
    poly = {5: 0b100101, 6: 0b1000011}.get(n)
    field = Field(n, poly)
    assert sum(field.trace(a) for a in field.elements()) == field.order // 2
    assert is_self_dual(field, field.self_dual_basis)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_expand_round_trip(n):
    field = Field(n)
    for a in field.elements():
        assert field.reconstruct(field.expand(a)) == a


@pytest.mark.parametrize("n", [2, 3, 4])
def test_frobenius_is_field_automorphism(n):
    field = Field(n)
    for a in field.elements():
        assert field.frobenius(a, n) == a
        for b in field.elements():
            assert field.frobenius(field.mul(a, b), 1) == field.mul(field.frobenius(a, 1),
                                                                    field.frobenius(b, 1))


def test_inverse(gf16):
    for a in range(1, gf16.order):
        assert gf16.mul(a, gf16.inverse(a)) == 1
    with pytest.raises(InverseOfZeroError):
        gf16.inverse(0)


def test_invalid_polynomials():
    with pytest.raises(ReduciblePolynomialError):
        Field(3, 0b1111)  # (x + 1)(x^2 + 1) over GF(2)
    with pytest.raises(DegreeMismatchError):
        Field(3, 0b10011)
    with pytest.raises(ValueError):
        Field(7)
    with pytest.raises(ValueError):
        Field(3, self_dual_basis=(1, 2, 4))


def test_alternative_polynomial_gives_valid_field():
    field = Field(3, 0b1101)
    assert is_irreducible(0b1101)
    assert is_self_dual(field, field.self_dual_basis)
    assert field != Field(3)


def test_default_polys_irreducible():
    assert all(is_irreducible(p) for p in DEFAULT_POLYS.values())


field_n = st.sampled_from([(5, 0b100101), (6, 0b1000011)])


@settings(max_examples=200, deadline=None)
@given(field_n, st.integers(0, 63), st.integers(0, 63), st.integers(0, 63))
def test_field_axioms_large_fields(spec, a, b, c):
    n, poly = spec
    field = _cached_field(n, poly)
    a, b, c = a % field.order, b % field.order, c % field.order
    assert field.mul(a, field.add(b, c)) == field.mul(a, b) ^ field.mul(a, c)
    assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
    assert field.trace(a ^ b) == field.trace(a) ^ field.trace(b)
    assert field.reconstruct(field.expand(a)) == a


_FIELDS = {}


def _cached_field(n, poly):
    if (n, poly) not in _FIELDS:
        _FIELDS[(n, poly)] = Field(n, poly)
    return _FIELDS[(n, poly)]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=3, max_size=3),
       st.lists(st.integers(0, 7), min_size=3, max_size=3))
def test_linearized_algebra(outer, inner):
    field = _cached_field(3, 0b1011)
    comp = lin_compose(field, outer, inner)
    for x in field.elements():
        assert lin_eval(field, comp, x) == lin_eval(field, outer, lin_eval(field, inner, x))
    assert lin_coeffs_from_table(field, lin_table(field, outer)) == tuple(outer)
    lam = field.sigma(3)
    scaled = lin_scale_arg(field, outer, lam)
    for x in field.elements():
        assert lin_eval(field, scaled, x) == lin_eval(field, outer, field.mul(lam, x))


def test_mul_table_vectorised(gf8):
    t = gf8.mul_table
    assert t.shape == (8, 8) and np.array_equal(t, t.T)
    assert not t.flags.writeable
