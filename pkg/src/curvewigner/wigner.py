"""Phase-point operators and discrete Wigner functions on curve bundles.

Kernels are stored densely as an array of shape ``(q, q, d, d)`` where
``kernel.operators[alpha, beta]`` is the operator at phase-space point
``(alpha, beta)``; ``alpha`` is the horizontal (Z) label and ``beta`` the
vertical (X) one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .curves import Curve, curve_points
from .exceptions import DimensionMismatch, NotABundleError
from .gf import Field
from .mubs import MubBundle, preset_generators, rotated_mubs, standard_mubs
from .pauli import displacement
from .rotations import CurveFunction, p_op, q_op


@dataclass(frozen=True)
class WignerKernel:
    field: Field
    operators: np.ndarray
    provenance: str = ""

    @property
    def dim(self) -> int:
        return self.field.order

    def __getitem__(self, point: tuple[int, int]) -> np.ndarray:
        return self.operators[point]


@dataclass(frozen=True)
class WignerGrid:
    """Real Wigner values, ``values[alpha, beta]``."""

    field: Field
    values: np.ndarray

    def __getitem__(self, point):
        return self.values[point]

    @property
    def support(self) -> set[tuple[int, int]]:
        return support(self)


def _striation_coverage(bundle: MubBundle) -> np.ndarray:
    """``cover[l, a, b]``: index kappa of the basis-l curve through (a, b)."""
    q = bundle.field.order
    cover = np.full((len(bundle.bases), q, q), -1, dtype=np.int64)
    for l, basis in enumerate(bundle.bases):
        for kappa, curve in enumerate(basis.striation):
            for a, b in curve_points(curve):
                if cover[l, a, b] != -1:
                    raise NotABundleError(
                        f"basis {basis.label!r}: curves {cover[l, a, b]} and {kappa} "
                        f"both pass through {(a, b)}")
                cover[l, a, b] = kappa
        if (cover[l] < 0).any():
            raise NotABundleError(f"striation of basis {basis.label!r} leaves points uncovered")
    return cover


def point_coverage(bundle: MubBundle) -> np.ndarray:
    """Number of bundle curves through each point (``q + 1`` for a valid bundle)."""
    q = bundle.field.order
    counts = np.zeros((q, q), dtype=np.int64)
    for basis in bundle.bases:
        for curve in basis.striation:
            for a, b in set(curve_points(curve)):
                counts[a, b] += 1
    return counts


def kernel_bundle(bundle: MubBundle) -> WignerKernel:
    """Sum of projectors on the states whose curves pass through each point, minus 1."""
    field = bundle.field
    q = d = field.order
    cover = _striation_coverage(bundle)
    ops = np.zeros((q, q, d, d), dtype=complex)
    ops -= np.eye(d)
    for l, basis in enumerate(bundle.bases):
        projs = np.einsum("ik,jk->kij", basis.states, basis.states.conj())
        ops += projs[cover[l]]
    return WignerKernel(field, ops, f"bundle:{bundle.name}")


def kernel_standard(field: Field) -> WignerKernel:
    kernel = kernel_bundle(standard_mubs(field))
    return WignerKernel(field, kernel.operators, "standard")


def kernel_transformed(field: Field, f: CurveFunction | None = None, g: CurveFunction | None = None,
                       h: CurveFunction | None = None, branch: str = "principal") -> WignerKernel:
    """Standard kernel conjugated pointwise by ``P_h Q_g P_f`` (point labels unchanged)."""
    zero = CurveFunction.zero(field)
    f, g, h = f or zero, g or zero, h or zero
    U = p_op(h, branch) @ q_op(g, branch) @ p_op(f, branch)
    base = kernel_standard(field).operators
    ops = np.einsum("ij,abjk,lk->abil", U, base, U.conj())
    return WignerKernel(field, ops, "transformed")


def preset_kernel(field: Field, preset: str, branch: str = "principal") -> WignerKernel:
    f, g, h = preset_generators(field, preset)
    return kernel_bundle(rotated_mubs(field, f, g, h, branch=branch, name=preset))


def as_density(state: np.ndarray) -> np.ndarray:
    state = np.asarray(state, dtype=complex)
    if state.ndim == 1:
        return np.outer(state, state.conj())
    return state


def wigner_function(state: np.ndarray, kernel: WignerKernel, imag_tol: float = 1e-12) -> WignerGrid:
    """``W(a, b) = Tr[rho w(a, b)]`` for a state vector or density matrix."""
    rho = as_density(state)
    if rho.shape != (kernel.dim, kernel.dim):
        raise DimensionMismatch(f"state of shape {np.shape(state)} vs kernel dimension {kernel.dim}")
    vals = np.einsum("ij,abji->ab", rho, kernel.operators)
    resid = float(np.max(np.abs(vals.imag)))
    if resid > imag_tol:
        raise ValueError(f"Wigner function has imaginary residue {resid:.3g}")
    return WignerGrid(kernel.field, vals.real.copy())


def marginal_along_curve(grid: WignerGrid, curve: Curve | Sequence[tuple[int, int]]) -> float:
    pts = curve_points(curve) if isinstance(curve, Curve) else list(curve)
    return float(sum(grid.values[a, b] for a, b in pts))


def tomographic_deviation(bundle: MubBundle, grid: WignerGrid, rho: np.ndarray) -> float:
    """Max over every striation curve of ``|sum_curve W - 2^n <Psi|rho|Psi>|``."""
    rho = as_density(rho)
    q = bundle.field.order
    worst = 0.0
    for basis in bundle.bases:
        probs = np.einsum("ik,ij,jk->k", basis.states.conj(), rho, basis.states).real
        for kappa, curve in enumerate(basis.striation):
            worst = max(worst, abs(marginal_along_curve(grid, curve) - q * probs[kappa]))
    return worst


def line_marginal_deviation(kernel: WignerKernel, bundle: MubBundle, rho: np.ndarray) -> float:
    """Straight-line marginals of ``kernel`` against the bundle's basis probabilities."""
    rho = as_density(rho)
    field = bundle.field
    q = field.order
    grid = wigner_function(rho, kernel)
    worst = 0.0
    for basis in bundle.bases:
        lam = None if basis.label == "x" else basis.label
        probs = np.einsum("ik,ij,jk->k", basis.states.conj(), rho, basis.states).real
        for kappa in field.elements():
            line = Curve.ray(field, lam, kappa)
            worst = max(worst, abs(marginal_along_curve(grid, line) - q * probs[kappa]))
    return worst


@dataclass(frozen=True)
class KernelReport:
    hermiticity: float
    trace: float
    completeness: float
    orthogonality: float

    def ok(self, herm_tol: float = 1e-12, tol: float = 1e-10) -> bool:
        return self.hermiticity < herm_tol and self.trace < tol and self.completeness < tol


def kernel_report(kernel: WignerKernel) -> KernelReport:
    """Hermiticity, unit trace, ``sum w = d * 1`` and ``Tr[w(p) w(p')] = d delta``."""
    ops = kernel.operators
    q, d = ops.shape[0], kernel.dim
    flat = ops.reshape(q * q, d, d)
    herm = float(np.max(np.abs(flat - flat.conj().transpose(0, 2, 1))))
    tr = float(np.max(np.abs(np.trace(flat, axis1=1, axis2=2) - 1.0)))
    comp = float(np.max(np.abs(flat.sum(axis=0) - d * np.eye(d))))
    gram = np.einsum("pij,sji->ps", flat, flat)
    orth = float(np.max(np.abs(gram - d * np.eye(q * q))))
    return KernelReport(herm, tr, comp, orth)


def reconstruct_density(grid: WignerGrid, kernel: WignerKernel) -> np.ndarray:
    """``rho = 2^-n sum W(p) w(p)``; exact when the kernel is orthogonal."""
    return np.einsum("ab,abij->ij", grid.values, kernel.operators) / kernel.dim


def covariance_check(kernel: WignerKernel, samples: int | None = None, seed: int = 0):
    """Max ``|w(p + p') - D(p') w(p) D(p')^dag|``.

    Exhaustive when ``samples`` is None, otherwise over ``samples`` seeded
    random quadruples. Returns ``(deviation, exhaustive)``.
    """
    field = kernel.field
    q = field.order
    ops = kernel.operators
    if samples is None:
        quads = [(a, b, a2, b2) for a in range(q) for b in range(q)
                 for a2 in range(q) for b2 in range(q)]
    else:
        rng = np.random.default_rng(seed)
        quads = [tuple(int(x) for x in row) for row in rng.integers(0, q, size=(samples, 4))]
    disp = {}
    worst = 0.0
    for a, b, a2, b2 in quads:
        D = disp.get((a2, b2))
        if D is None:
            D = disp[(a2, b2)] = displacement(field, a2, b2)
        diff = ops[a ^ a2, b ^ b2] - D @ ops[a, b] @ D.conj().T
        worst = max(worst, float(np.linalg.norm(diff, 2)))
    return worst, samples is None


@dataclass(frozen=True)
class Negativity:
    min_value: float
    sum_negative: float


def negativity(grid: WignerGrid, tol: float = 1e-12) -> Negativity:
    """Minimum entry and absolute sum of negative entries (noise below ``tol`` ignored)."""
    v = grid.values
    neg = v[v < -tol]
    return Negativity(float(v.min()), float(-neg.sum()) if neg.size else 0.0)


def support(grid: WignerGrid, tol: float = 1e-10) -> set[tuple[int, int]]:
    a, b = np.nonzero(np.abs(grid.values) > tol)
    return set(zip(a.tolist(), b.tolist()))
