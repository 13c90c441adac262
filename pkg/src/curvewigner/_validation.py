"""Input checks shared by the estimator and the CLI."""
from __future__ import annotations

import numpy as np

from .exceptions import DimensionMismatch


def check_state_vector(psi, dim: int | None = None, atol: float = 1e-10) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1:
        raise DimensionMismatch(f"expected a 1-d state vector, got shape {psi.shape}")
    if dim is not None and psi.shape[0] != dim:
        raise DimensionMismatch(f"state has dimension {psi.shape[0]}, expected {dim}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > atol:
        raise ValueError(f"state vector is not normalized (norm {norm:.12g})")
    return psi


def check_density_matrix(rho, dim: int | None = None, atol: float = 1e-10) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise DimensionMismatch(f"density matrix has dimension {rho.shape[0]}, expected {dim}")
    if np.max(np.abs(rho - rho.conj().T)) > atol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > atol:
        raise ValueError(f"density matrix has trace {np.trace(rho).real:.12g}")
    if np.linalg.eigvalsh(rho).min() < -atol:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


def check_states(X, dim: int) -> np.ndarray:
    """Coerce a batch of states into density matrices of shape ``(m, dim, dim)``.

    A 1-d array is one state vector, a 2-d array is ``m`` state vectors (one
    per row) and a 3-d array is ``m`` density matrices.
    """
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[None]
    if X.ndim == 2:
        if X.shape[1] != dim:
            raise DimensionMismatch(f"states have dimension {X.shape[1]}, expected {dim}")
        for psi in X:
            check_state_vector(psi, dim)
        return np.einsum("mi,mj->mij", X, X.conj())
    if X.ndim == 3:
        for rho in X:
            check_density_matrix(rho, dim)
        return X
    raise DimensionMismatch(f"cannot interpret input of shape {X.shape} as states")


def random_density_matrix(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Ginibre-distributed density matrix of the given rank (full by default)."""
    rank = dim if rank is None else rank
    G = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = G @ G.conj().T
    return rho / np.trace(rho).real


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random state vector."""
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return z / np.linalg.norm(z)
