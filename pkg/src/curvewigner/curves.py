"""Stabilizer curves in the discrete phase space and their factorization."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from more_itertools import set_partitions

from .exceptions import NoCommutingPartition, NotABundleError
from .gf import Field, lin_eval

Point = tuple[int, int]

REGULAR_BETA_OF_ALPHA = "regular_beta_of_alpha"
REGULAR_ALPHA_OF_BETA = "regular_alpha_of_beta"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Curve:
    """Parametric curve ``tau -> (alpha(tau), beta(tau)) + offset``.

    ``alpha(tau) = sum_r alpha_coeffs[r] * tau ** (2 ** r)`` and likewise for
    beta. A nonzero ``offset`` describes a translate of the origin curve.
    """

    field: Field
    alpha_coeffs: tuple[int, ...]
    beta_coeffs: tuple[int, ...]
    offset: Point = (0, 0)

    def __post_init__(self):
        n = self.field.n
        for name in ("alpha_coeffs", "beta_coeffs"):
            coeffs = tuple(int(c) for c in getattr(self, name))
            coeffs = coeffs + (0,) * (n - len(coeffs))
            if len(coeffs) != n or any(not 0 <= c < self.field.order for c in coeffs):
                raise ValueError(f"{name} must hold at most {n} field elements")
            object.__setattr__(self, name, coeffs)
        object.__setattr__(self, "offset", (int(self.offset[0]), int(self.offset[1])))

    @classmethod
    def ray(cls, field: Field, lam: int | None, kappa: int = 0) -> "Curve":
        """Line ``beta = lam * alpha + kappa``; ``lam=None`` gives ``alpha = kappa``."""
        zero = (0,) * field.n
        one = (1,) + zero[1:]
        if lam is None:
            return cls(field, zero, one, (kappa, 0))
        return cls(field, one, (lam,) + zero[1:], (0, kappa))

    def translate(self, point: Point) -> "Curve":
        return Curve(self.field, self.alpha_coeffs, self.beta_coeffs,
                     (self.offset[0] ^ point[0], self.offset[1] ^ point[1]))

    @property
    def origin_curve(self) -> "Curve":
        return Curve(self.field, self.alpha_coeffs, self.beta_coeffs)

    def alpha(self, tau: int) -> int:
        return lin_eval(self.field, self.alpha_coeffs, tau)

    def beta(self, tau: int) -> int:
        return lin_eval(self.field, self.beta_coeffs, tau)

    def monomials(self) -> list[Point]:
        """Labels of the commuting monomials, i.e. the untranslated points."""
        return [(self.alpha(t), self.beta(t)) for t in self.field.elements()]

    def describe(self, display: str = "power") -> str:
        fmt = lambda a: self.field.format(a, display)  # noqa: E731

        def poly(coeffs, const):
            terms = [fmt(const)] if const else []
            for r, c in enumerate(coeffs):
                if c:
                    mono = "τ" if r == 0 else f"τ^{1 << r}"
                    terms.append(mono if c == 1 else f"{fmt(c)}{mono}")
            return " + ".join(terms) or "0"

        return (f"α = {poly(self.alpha_coeffs, self.offset[0])}, "
                f"β = {poly(self.beta_coeffs, self.offset[1])}")


def curve_points(curve: Curve) -> list[Point]:
    """All ``2^n`` points ordered by the parameter's integer encoding."""
    a0, b0 = curve.offset
    return [(a ^ a0, b ^ b0) for a, b in curve.monomials()]


def _bits(field: Field, points: Sequence[Point]) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=np.int64).reshape(-1, 2)
    exp = field.expansion_table
    return exp[pts[:, 0]], exp[pts[:, 1]]


def _commutes_pairwise(field: Field, points: Sequence[Point]) -> bool:
    a, b = _bits(field, points)
    form = (a @ b.T + b @ a.T) % 2
    return not form.any()


def coefficient_condition(curve: Curve) -> bool:
    """Commutativity tested on the coefficients alone (subscripts mod n).

    ``sum_r a_{p-r}^{2^r} b_{q-r}^{2^r} == sum_r a_{q-r}^{2^r} b_{p-r}^{2^r}``
    for every ``p, q``.
    """
    field, n = curve.field, curve.field.n
    al, be = curve.alpha_coeffs, curve.beta_coeffs

    def side(x, y, p, q):
        acc = 0
        for r in range(n):
            acc ^= field.frobenius(field.mul(x[(p - r) % n], y[(q - r) % n]), r)
        return acc

    return all(side(al, be, p, q) == side(al, be, q, p)
               for p in range(n) for q in range(n))


@dataclass(frozen=True)
class CurveReport:
    commuting: bool
    origin: bool
    injective: bool
    coefficient_condition: bool

    @property
    def valid(self) -> bool:
        return self.commuting and self.origin and self.injective

    def failures(self) -> list[str]:
        return [name for name in ("commuting", "origin", "injective") if not getattr(self, name)]


def is_stabilizer_curve(curve: Curve) -> CurveReport:
    """Validate ``curve``; pairwise commutation is authoritative and the
    coefficient condition is reported next to it as a cross-check."""
    mono = curve.monomials()
    return CurveReport(
        commuting=_commutes_pairwise(curve.field, mono),
        origin=mono[0] == (0, 0),
        injective=len(set(mono)) == len(mono),
        coefficient_condition=coefficient_condition(curve),
    )


def classify_regularity(curve: Curve) -> str:
    mono = curve.monomials()
    q = curve.field.order
    if len({a for a, _ in mono}) == q:
        return REGULAR_BETA_OF_ALPHA
    if len({b for _, b in mono}) == q:
        return REGULAR_ALPHA_OF_BETA
    return DEGENERATE


def intersect(c1: Curve, c2: Curve) -> list[Point]:
    common = set(curve_points(c1)) & set(curve_points(c2))
    return sorted(common)


@dataclass(frozen=True)
class FactorizationPartition:
    """Block sizes ``m_1 <= ... <= m_k`` and the qubits (1-based) in each block."""

    blocks: tuple[int, ...]
    block_members: tuple[tuple[int, ...], ...]

    def __str__(self):
        return "{" + ",".join(map(str, self.blocks)) + "}"


def restricted_forms_vanish(field: Field, points: Sequence[Point], block: Iterable[int]) -> bool:
    """Do the monomials still pairwise commute when cut down to qubits ``block``?"""
    idx = list(block)
    a, b = _bits(field, points)
    a, b = a[:, idx], b[:, idx]
    return not ((a @ b.T + b @ a.T) % 2).any()


def factorization_of_points(field: Field, points: Sequence[Point]) -> FactorizationPartition:
    """Finest partition of the qubits into blocks that commute blockwise."""
    best: list[list[list[int]]] = []
    for partition in set_partitions(range(field.n)):
        if not all(restricted_forms_vanish(field, points, blk) for blk in partition):
            continue
        if not best or len(partition) > len(best[0]):
            best = [partition]
        elif len(partition) == len(best[0]):
            best.append(partition)
    if not best:
        raise NoCommutingPartition("monomials do not commute even as a single block")
    if len(best) > 1:
        raise AssertionError(f"finest commuting partition is not unique: {best}")
    members = sorted(tuple(i + 1 for i in blk) for blk in best[0])
    members.sort(key=lambda blk: (len(blk), blk))
    return FactorizationPartition(tuple(len(m) for m in members), tuple(members))


def factorization(curve: Curve) -> FactorizationPartition:
    return factorization_of_points(curve.field, curve.monomials())


@lru_cache(maxsize=None)
def canonical_partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer partitions of ``n``, most-factorized first, ties lexicographic."""
    parts = {tuple(sorted(len(b) for b in p)) for p in set_partitions(range(n))}
    return tuple(sorted(parts, key=lambda p: (-len(p), p)))


@dataclass(frozen=True)
class BundleSignature:
    n: int
    counts: tuple[int, ...]

    @property
    def partitions(self) -> tuple[tuple[int, ...], ...]:
        return canonical_partitions(self.n)

    def __str__(self):
        return "(" + ",".join(map(str, self.counts)) + ")"


def check_bundle(curves: Sequence[Curve]) -> None:
    """Raise :class:`NotABundleError` unless the origin curves meet only at 0."""
    q = curves[0].field.order
    if len(curves) != q + 1:
        raise NotABundleError(f"a bundle needs {q + 1} curves, got {len(curves)}")
    seen: dict[Point, int] = {}
    for i, c in enumerate(curves):
        for p in set(c.monomials()):
            if p == (0, 0):
                continue
            if p in seen:
                raise NotABundleError(f"curves {seen[p]} and {i} share the point {p}")
            seen[p] = i


def bundle_signature(curves: Sequence[Curve]) -> BundleSignature:
    check_bundle(curves)
    n = curves[0].field.n
    tally = Counter(factorization(c).blocks for c in curves)
    return BundleSignature(n, tuple(tally.get(p, 0) for p in canonical_partitions(n)))
