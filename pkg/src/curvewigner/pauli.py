"""Generalized Pauli operators labelled by field elements.

Matrices act on ``C^(2^n)`` with rows and columns indexed by the integer
encoding of the basis label ``kappa``. Monomials are always taken in the
order ``Z_alpha X_beta``.
"""
from __future__ import annotations

from functools import reduce
from typing import NamedTuple

import numpy as np

from .gf import Field

_I2 = np.eye(2, dtype=complex)
_SZ = np.diag([1.0, -1.0]).astype(complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)


class PauliMonomial(NamedTuple):
    """Phase-space point ``(alpha, beta)`` labelling ``Z_alpha X_beta``."""

    alpha: int
    beta: int


def z_op(field: Field, alpha: int) -> np.ndarray:
    return np.diag(field.character_table[:, alpha].astype(complex))


def x_op(field: Field, beta: int) -> np.ndarray:
    q = field.order
    out = np.zeros((q, q), dtype=complex)
    kappa = np.arange(q)
    out[kappa ^ beta, kappa] = 1.0
    return out


def displacement(field: Field, alpha: int, beta: int) -> np.ndarray:
    """``Z_alpha X_beta`` as a dense matrix."""
    # (Z X)[k ^ beta, k] = chi((k ^ beta) * alpha)
    q = field.order
    out = np.zeros((q, q), dtype=complex)
    kappa = np.arange(q)
    rows = kappa ^ beta
    out[rows, kappa] = field.character_table[rows, alpha]
    return out


def symplectic_form(field: Field, p: tuple[int, int], p2: tuple[int, int]) -> int:
    """``tr(alpha beta' + alpha' beta)``; the monomials commute iff this is 0."""
    (a, b), (a2, b2) = p, p2
    return field.trace(field.mul(a, b2) ^ field.mul(a2, b))


def commutation_phase(field: Field, p: tuple[int, int], p2: tuple[int, int]) -> int:
    """``D(p) D(p2) = phase * D(p2) D(p)``."""
    return 1 - 2 * symplectic_form(field, p, p2)


def product_index(field: Field) -> np.ndarray:
    """Map field label ``kappa`` to the tensor-product index ``k_1 k_2 ... k_n``.

    Qubit 1 is the most significant bit, matching ``np.kron`` ordering.
    """
    weights = 1 << np.arange(field.n - 1, -1, -1)
    return field.expansion_table @ weights


def to_product_basis(field: Field, op: np.ndarray) -> np.ndarray:
    """Re-index a field-labelled operator or vector into qubit product order."""
    perm = product_index(field)
    if op.ndim == 1:
        out = np.empty_like(op)
        out[perm] = op
        return out
    out = np.empty_like(op)
    out[np.ix_(perm, perm)] = op
    return out


def from_product_basis(field: Field, op: np.ndarray) -> np.ndarray:
    perm = product_index(field)
    if op.ndim == 1:
        return op[perm]
    return op[np.ix_(perm, perm)]


def tensor_factorize(field: Field, alpha: int, beta: int):
    """Split ``Z_alpha X_beta`` into single-qubit factors.

    Returns
    -------
    factors : list of (a_i, b_i)
        ``sigma_z**a_i sigma_x**b_i`` acts on qubit ``i``.
    scalar : complex
        ``displacement(alpha, beta) == scalar * kron(factors)`` (field order).
    """
    a = field.expand(alpha)
    b = field.expand(beta)
    factors = list(zip(a, b))
    mats = [np.linalg.matrix_power(_SZ, ai) @ np.linalg.matrix_power(_SX, bi)
            for ai, bi in factors]
    rebuilt = from_product_basis(field, reduce(np.kron, mats))
    target = displacement(field, alpha, beta)
    # both are monomial matrices, compare on any nonzero entry
    i, j = np.argwhere(np.abs(rebuilt) > 0.5)[0]
    scalar = complex(target[i, j] / rebuilt[i, j])
    if not np.allclose(target, scalar * rebuilt, atol=1e-12):
        raise AssertionError(f"tensor rebuild of ({alpha}, {beta}) is not proportional")
    return factors, scalar


def fourier(field: Field) -> np.ndarray:
    """Finite Fourier transform ``<lam|F|kappa> = 2^(-n/2) chi(kappa lam)``."""
    return field.character_table.astype(complex) / np.sqrt(field.order)


def x_basis_state(field: Field, kappa: int) -> np.ndarray:
    """Eigenstate of every ``X_beta`` with eigenvalue ``chi(kappa beta)``."""
    return fourier(field)[:, kappa].copy()


def basis_state(field: Field, kappa: int) -> np.ndarray:
    v = np.zeros(field.order, dtype=complex)
    v[kappa] = 1.0
    return v
