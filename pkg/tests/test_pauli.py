import itertools

import numpy as np
import pytest

from curvewigner.gf import Field
from curvewigner.pauli import (
    basis_state,
    commutation_phase,
    displacement,
    fourier,
    tensor_factorize,
    to_product_basis,
    x_basis_state,
    x_op,
    z_op,
)

from oracles import qubit_paulis


@pytest.mark.parametrize("n", [2, 3])
def test_weyl_relation(n):
    field = Field(n)
    for a, b in itertools.product(field.elements(), repeat=2):
        lhs = x_op(field, b) @ z_op(field, a)
        assert np.allclose(lhs, field.character(field.mul(a, b)) * z_op(field, a) @ x_op(field, b))


@pytest.mark.parametrize("n", [2, 3])
def test_commutation_phase_matches_matrices(n):
    field = Field(n)
    pts = list(itertools.product(field.elements(), repeat=2))
    D = {p: displacement(field, *p) for p in pts}
    for p, p2 in itertools.product(pts, repeat=2):
        phase = commutation_phase(field, p, p2)
        assert np.allclose(D[p] @ D[p2], phase * D[p2] @ D[p])


def test_fourier_properties(gf8):
    F = fourier(gf8)
    assert np.allclose(F @ F, np.eye(8))
    assert np.allclose(F, F.T)
    for a in gf8.elements():
        assert np.allclose(F @ z_op(gf8, a) @ F.conj().T, x_op(gf8, a))


def test_x_basis_eigenstates(gf8):
    for k in gf8.elements():
        v = x_basis_state(gf8, k)
        for b in gf8.elements():
            assert np.allclose(x_op(gf8, b) @ v, gf8.character(gf8.mul(k, b)) * v)


def test_z_eigenstates(gf8):
    for k in gf8.elements():
        e = basis_state(gf8, k)
        for a in gf8.elements():
            assert np.allclose(z_op(gf8, a) @ e, gf8.character(gf8.mul(k, a)) * e)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tensor_factorization_matches_kron(n):
    field = Field(n)
    for a, b in itertools.product(field.elements(), repeat=2):
        factors, scalar = tensor_factorize(field, a, b)
        assert scalar == pytest.approx(1.0)
        a_bits, b_bits = zip(*factors)
        assert np.allclose(to_product_basis(field, displacement(field, a, b)),
                           qubit_paulis(a_bits, b_bits))


def test_product_basis_vector_reindex(gf8):
    # sigma^0 = theta_1 + theta_2 + theta_3 is |111>
    v = to_product_basis(gf8, basis_state(gf8, 1))
    assert v[7] == 1
