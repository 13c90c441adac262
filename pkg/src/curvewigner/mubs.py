"""Complete sets of mutually unbiased bases built from curve bundles.

The standard set comes from the rays ``beta = lam * alpha`` and ``alpha = 0``.
Rotated sets apply ``U = P_h Q_g P_f`` to every state; on phase space the
same rotation acts as the symplectic map ``S = (P_h) o (Q_g) o (P_f)``, so
each basis is attached to the image under ``S`` of its straight-line
striation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .curves import BundleSignature, Curve, bundle_signature, factorization
from .exceptions import PresetError, UnknownLabel
from .gf import Field, lin_add, lin_coeffs_from_table, lin_compose, lin_eval, lin_identity, lin_scale_arg, lin_zero
from .pauli import displacement, fourier
from .rotations import CurveFunction, p_op, q_op

X_AXIS = "x"
Label = Union[int, str]

PRESETS = ("standard", "set162", "set234", "set090")


@dataclass(frozen=True)
class SymplecticMap:
    """``(a, b) -> (A(a) + B(b), C(a) + D(b))`` with linearized entries."""

    field: Field
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    D: tuple[int, ...]

    @classmethod
    def identity(cls, field: Field) -> "SymplecticMap":
        one, zero = lin_identity(field), lin_zero(field)
        return cls(field, one, zero, zero, one)

    def then(self, other: "SymplecticMap") -> "SymplecticMap":
        """Apply ``self`` first, then ``other``."""
        fld = self.field
        comp = lambda x, y: lin_compose(fld, x, y)  # noqa: E731
        return SymplecticMap(
            fld,
            lin_add(comp(other.A, self.A), comp(other.B, self.C)),
            lin_add(comp(other.A, self.B), comp(other.B, self.D)),
            lin_add(comp(other.C, self.A), comp(other.D, self.C)),
            lin_add(comp(other.C, self.B), comp(other.D, self.D)),
        )

    def __call__(self, point: tuple[int, int]) -> tuple[int, int]:
        a, b = point
        ev = lambda c, x: lin_eval(self.field, c, x)  # noqa: E731
        return ev(self.A, a) ^ ev(self.B, b), ev(self.C, a) ^ ev(self.D, b)


def _coeffs(fn: CurveFunction) -> tuple[int, ...]:
    if fn.coeffs is not None:
        return fn.coeffs
    return lin_coeffs_from_table(fn.field, fn.table)


def p_map(f: CurveFunction) -> SymplecticMap:
    field = f.field
    one, zero = lin_identity(field), lin_zero(field)
    return SymplecticMap(field, one, zero, _coeffs(f), one)


def q_map(g: CurveFunction) -> SymplecticMap:
    field = g.field
    one, zero = lin_identity(field), lin_zero(field)
    return SymplecticMap(field, one, _coeffs(g), zero, one)


@dataclass(frozen=True)
class MubBasis:
    """One basis of a bundle.

    ``states[:, kappa]`` is the state attached to the curve
    ``curve.translate(offsets[kappa])``.
    """

    label: Label
    states: np.ndarray
    curve: Curve
    offsets: tuple[tuple[int, int], ...]

    @property
    def striation(self) -> list[Curve]:
        return [self.curve.translate(p) for p in self.offsets]

    def state(self, kappa: int) -> np.ndarray:
        return self.states[:, kappa]

    @property
    def factorization(self):
        return factorization(self.curve)


@dataclass(frozen=True)
class MubBundle:
    field: Field
    generators: tuple[CurveFunction, CurveFunction, CurveFunction]
    bases: tuple[MubBasis, ...]
    rotation: np.ndarray
    name: str = "custom"

    @property
    def curves(self) -> list[Curve]:
        return [b.curve for b in self.bases]

    @property
    def signature(self) -> BundleSignature:
        return bundle_signature(self.curves)

    def basis(self, label: Label) -> MubBasis:
        for b in self.bases:
            if b.label == label:
                return b
        raise UnknownLabel(f"no basis labelled {label!r}")


def rotated_mubs(field: Field, f: CurveFunction | None = None, g: CurveFunction | None = None,
                 h: CurveFunction | None = None, branch: str = "principal",
                 name: str = "custom") -> MubBundle:
    """States ``P_h Q_g P_f |Psi>`` for every standard state ``|Psi>``."""
    f = f or CurveFunction.zero(field)
    g = g or CurveFunction.zero(field)
    h = h or CurveFunction.zero(field)
    U = p_op(h, branch) @ q_op(g, branch) @ p_op(f, branch)
    S = p_map(f).then(q_map(g)).then(p_map(h))

    bases = []
    for lam in field.elements():
        ray = CurveFunction.linearized(field, [lam])
        states = U @ p_op(ray, branch)
        # image of tau -> (tau, lam tau)
        curve = Curve(field, lin_add(S.A, lin_scale_arg(field, S.B, lam)),
                      lin_add(S.C, lin_scale_arg(field, S.D, lam)))
        offsets = tuple(S((0, kappa)) for kappa in field.elements())
        bases.append(MubBasis(lam, states, curve, offsets))
    states = U @ fourier(field)
    curve = Curve(field, S.B, S.D)
    offsets = tuple(S((kappa, 0)) for kappa in field.elements())
    bases.append(MubBasis(X_AXIS, states, curve, offsets))
    return MubBundle(field, (f, g, h), tuple(bases), U, name)


def standard_mubs(field: Field, branch: str = "principal") -> MubBundle:
    return rotated_mubs(field, branch=branch, name="standard")


def preset_generators(field: Field, preset: str, mu: int | None = None):
    """``(f, g, h)`` for the four inequivalent three-qubit sets.

    ``set234`` is the product ``Q_f P_f`` (``P_f`` acts first) with
    ``f = mu a + a^2 + a^4`` and ``mu = sigma^2`` by default. Every
    ``mu != 0, 1`` gives the same signature; ``mu = 1`` turns ``f`` into the
    trace map and the bundle collapses back to the ray structure.
    """
    if preset not in PRESETS:
        raise PresetError(f"unknown preset {preset!r}; choose from {PRESETS}")
    zero = CurveFunction.zero(field)
    if preset == "standard":
        return zero, zero, zero
    if field.n != 3:
        raise PresetError(f"preset {preset!r} is defined only for n=3")
    s = field.sigma
    if preset == "set162":
        return CurveFunction.linearized(field, [1, 1, 1]), zero, zero
    if preset == "set234":
        mu = s(2) if mu is None else mu
        if mu == 0:
            raise PresetError("set234 needs mu != 0")
        f = CurveFunction.linearized(field, [mu, 1, 1])
        return f, f, zero
    f = CurveFunction.linearized(field, [1, s(2), s(1)])
    return f, f, f


def preset_bundle(field: Field, preset: str, branch: str = "principal", mu: int | None = None) -> MubBundle:
    f, g, h = preset_generators(field, preset, mu)
    return rotated_mubs(field, f, g, h, branch=branch, name=preset)


def associate_curve(bundle: MubBundle, label: Label, kappa: int) -> Curve:
    """Curve attached to the state ``kappa`` of basis ``label``."""
    basis = bundle.basis(label)
    if not 0 <= kappa < bundle.field.order:
        raise UnknownLabel(f"kappa={kappa} is not a field element")
    return basis.curve.translate(basis.offsets[kappa])


@dataclass(frozen=True)
class UnbiasednessReport:
    overlap_deviation: float
    orthonormality_deviation: float

    def ok(self, tol: float = 1e-10) -> bool:
        return self.overlap_deviation < tol and self.orthonormality_deviation < tol


def verify_unbiased(bundle: MubBundle | Sequence[np.ndarray]) -> UnbiasednessReport:
    """Max ``| |<a|b>|^2 - 2^-n |`` across bases and max ``|G - 1|`` within."""
    mats = [b.states for b in bundle.bases] if isinstance(bundle, MubBundle) else list(bundle)
    d = mats[0].shape[0]
    ortho = max(float(np.max(np.abs(m.conj().T @ m - np.eye(d)))) for m in mats)
    overlap = 0.0
    for m1, m2 in itertools.combinations(mats, 2):
        ov = np.abs(m1.conj().T @ m2) ** 2
        overlap = max(overlap, float(np.max(np.abs(ov - 1.0 / d))))
    return UnbiasednessReport(overlap, ortho)


def eigenstate_deviation(bundle: MubBundle) -> float:
    """Largest failure of a basis state to be an eigenvector of its curve's monomials."""
    worst = 0.0
    for basis in bundle.bases:
        for p in basis.curve.monomials():
            M = displacement(bundle.field, *p)
            MS = M @ basis.states
            ev = np.einsum("ij,ij->j", basis.states.conj(), MS)
            worst = max(worst,
                        float(np.max(np.abs(MS - basis.states * ev[None, :]))),
                        float(np.max(np.abs(np.abs(ev) - 1.0))))
    return worst


def curve_eigenbasis(curve: Curve) -> np.ndarray:
    """Joint eigenbasis of a stabilizer curve's monomials (columns).

    Column ``s`` is the common eigenvector on which the Hermitian generator
    ``H_i = i^tr(a_i b_i) Z_a_i X_b_i`` (``tau = theta_i``) has eigenvalue
    ``(-1) ** bit_i(s)``, bit 0 referring to ``theta_1``.
    """
    field = curve.field
    d = field.order
    gens = []
    for t in field.self_dual_basis:
        a, b = curve.alpha(t), curve.beta(t)
        gens.append((1j ** field.trace(field.mul(a, b))) * displacement(field, a, b))
    out = np.zeros((d, d), dtype=complex)
    for s in range(d):
        proj = np.eye(d, dtype=complex)
        for i, H in enumerate(gens):
            sign = -1 if (s >> i) & 1 else 1
            proj = proj @ (np.eye(d) + sign * H) / 2
        # rank one: take the column of largest norm
        col = proj[:, int(np.argmax(np.linalg.norm(proj, axis=0)))]
        out[:, s] = col / np.linalg.norm(col)
    return out
