"""Symplectic rotations ``P_f`` (diagonal in the X eigenbasis) and ``Q_g``
(diagonal in the computational basis).

The diagonal phases ``c(kappa)`` solve

    c(k) c(k') = chi(k' f(k)) c(k + k'),   c(0) = 1,

and always lie in ``{1, i, -1, -i}``, so they are stored exactly as exponents
of ``i`` modulo 4.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .exceptions import InconsistentRecurrence
from .gf import Field, lin_coeffs_from_table, lin_eval
from .pauli import displacement, fourier, x_op, z_op

_I_POWERS = np.array([1, 1j, -1, -1j])


@dataclass(frozen=True)
class CurveFunction:
    """A map ``f`` on the field, given by linearized coefficients or a table.

    ``coeffs[r]`` multiplies ``x ** (2 ** r)``. The abelian condition
    ``tr(k' f(k)) == tr(k f(k'))`` is checked on construction.
    """

    field: Field
    table: tuple[int, ...]
    coeffs: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.table) != self.field.order:
            raise ValueError(f"table needs {self.field.order} entries, got {len(self.table)}")
        if not self.is_abelian():
            raise InconsistentRecurrence(
                "abelian condition tr(k' f(k)) = tr(k f(k')) fails for "
                f"{self.describe()}")

    @classmethod
    def linearized(cls, field: Field, coeffs: Sequence[int]) -> "CurveFunction":
        coeffs = tuple(int(c) for c in coeffs) + (0,) * (field.n - len(coeffs))
        if len(coeffs) != field.n:
            raise ValueError(f"at most {field.n} coefficients allowed")
        table = tuple(lin_eval(field, coeffs, x) for x in field.elements())
        return cls(field, table, coeffs)

    @classmethod
    def from_table(cls, field: Field, table: Sequence[int]) -> "CurveFunction":
        return cls(field, tuple(int(v) for v in table))

    @classmethod
    def zero(cls, field: Field) -> "CurveFunction":
        return cls.linearized(field, [0] * field.n)

    def __call__(self, x: int) -> int:
        return self.table[x]

    @property
    def values(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    @property
    def is_zero(self) -> bool:
        return not any(self.table)

    def is_abelian(self) -> bool:
        fv = self.values
        # form[k, k'] = tr(k' f(k))
        form = self.field.trace_table[self.field.mul_table[fv[:, None], np.arange(self.field.order)[None, :]]]
        return bool(np.array_equal(form, form.T))

    def describe(self) -> str:
        if self.coeffs is not None:
            return f"coeffs={list(self.coeffs)}"
        return f"table={list(self.table)}"


def random_abelian_function(field: Field, rng: np.random.Generator) -> CurveFunction:
    """Random linearized ``f`` satisfying the abelian condition.

    ``tr(theta_i f(theta_j))`` is drawn as a random symmetric 0/1 matrix.
    """
    n = field.n
    upper = np.triu(rng.integers(0, 2, size=(n, n)))
    sym = upper | upper.T
    images = [field.reconstruct(sym[:, j]) for j in range(n)]
    table = [0] * field.order
    for x in field.elements():
        for bit, img in zip(field.expand(x), images):
            if bit:
                table[x] ^= img
    return CurveFunction.linearized(field, lin_coeffs_from_table(field, table))


@dataclass(frozen=True)
class RotationCoefficients:
    """Solution of the phase recurrence, ``c(kappa) = 1j ** exponents[kappa]``."""

    function: CurveFunction
    exponents: tuple[int, ...]
    branch: str = dc_field(default="principal")

    @property
    def values(self) -> np.ndarray:
        return _I_POWERS[np.asarray(self.exponents)]

    def __getitem__(self, kappa: int) -> complex:
        return complex(_I_POWERS[self.exponents[kappa]])


def _extend(field: Field, fv: np.ndarray, seeds: dict[int, int], order: Sequence[int]) -> list[int]:
    exps = [0] * field.order
    for kappa in field.elements():
        bits = field.expand(kappa)
        acc, e = 0, 0
        for i in order:
            if bits[i]:
                t = field.self_dual_basis[i]
                # c(acc + t) = c(acc) c(t) chi(t f(acc))
                e = (e + seeds[t] + 2 * field.trace(field.mul(t, int(fv[acc])))) % 4
                acc ^= t
        exps[kappa] = e
    return exps


def recurrence_violations(field: Field, fv: np.ndarray, exps: Sequence[int]) -> int:
    """Number of ordered pairs breaking the recurrence (exact mod-4 check)."""
    e = np.asarray(exps)
    k = np.arange(field.order)
    chi_exp = 2 * field.trace_table[field.mul_table[k[None, :], fv[:, None]]]
    lhs = (e[:, None] + e[None, :]) % 4
    rhs = (chi_exp + e[k[:, None] ^ k[None, :]]) % 4
    return int(np.count_nonzero(lhs != rhs))


def solve_coefficients(f: CurveFunction, branch: str = "principal") -> RotationCoefficients:
    """Solve the recurrence from seeds on the self-dual basis.

    ``c(theta_i)`` is a square root of ``chi(theta_i f(theta_i))``: ``+1`` or,
    for ``chi = -1``, ``+i`` on the principal branch and ``-i`` on the
    ``"conjugate"`` branch.
    """
    if branch not in ("principal", "conjugate"):
        raise ValueError(f"unknown branch {branch!r}")
    field = f.field
    fv = f.values
    odd_root = 1 if branch == "principal" else 3
    seeds = {t: (0 if field.character(field.mul(t, int(fv[t]))) == 1 else odd_root)
             for t in field.self_dual_basis}
    exps = _extend(field, fv, seeds, range(field.n))
    if recurrence_violations(field, fv, exps):
        raise InconsistentRecurrence(f"recurrence has no solution for {f.describe()}")
    if exps != _extend(field, fv, seeds, range(field.n - 1, -1, -1)):
        raise InconsistentRecurrence("recurrence solution depends on extension order")
    return RotationCoefficients(f, tuple(exps), branch)


def p_op(f: CurveFunction, branch: str = "principal") -> np.ndarray:
    """``P_f = sum_k c(k) |k~><k~|`` with ``|k~>`` the X eigenstates."""
    F = fourier(f.field)
    c = solve_coefficients(f, branch).values
    return (F * c[None, :]) @ F.conj().T


def q_op(g: CurveFunction, branch: str = "principal") -> np.ndarray:
    """``Q_g = sum_k c(k) |k><k|``."""
    return np.diag(solve_coefficients(g, branch).values)


def proportionality(a: np.ndarray, b: np.ndarray) -> tuple[complex, float]:
    """Best scalar ``s`` with ``a ~ s b`` and the residual ``max|a - s b|``."""
    denom = np.vdot(b, b)
    s = complex(np.vdot(b, a) / denom)
    return s, float(np.max(np.abs(a - s * b)))


def p_conjugation_report(f: CurveFunction, branch: str = "principal"):
    """For each ``alpha``: scalar ``s`` with ``P Z_a P^dag = s Z_a X_f(a)`` and residual."""
    field = f.field
    P = p_op(f, branch)
    out = []
    for a in field.elements():
        s, dev = proportionality(P @ z_op(field, a) @ P.conj().T, displacement(field, a, f(a)))
        out.append((a, s, dev))
    return out


def q_conjugation_report(g: CurveFunction, branch: str = "principal"):
    """For each ``beta``: scalar ``s`` with ``Q X_b Q^dag = s Z_g(b) X_b`` and residual."""
    field = g.field
    Q = q_op(g, branch)
    out = []
    for b in field.elements():
        s, dev = proportionality(Q @ x_op(field, b) @ Q.conj().T, displacement(field, g(b), b))
        out.append((b, s, dev))
    return out


def p_point_map(f: CurveFunction, point: tuple[int, int]) -> tuple[int, int]:
    """Phase-space action of ``P_f``: ``(a, b) -> (a, b + f(a))``."""
    a, b = point
    return a, b ^ f(a)


def q_point_map(g: CurveFunction, point: tuple[int, int]) -> tuple[int, int]:
    """Phase-space action of ``Q_g``: ``(a, b) -> (a + g(b), b)``."""
    a, b = point
    return a ^ g(b), b
