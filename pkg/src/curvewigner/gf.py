"""Arithmetic in GF(2^n).

Elements are plain ``int`` values whose bit ``r`` is the coefficient of
``x**r`` in the polynomial basis; ``0`` is the field zero and ``1`` the unit.
A :class:`Field` carries the reduction polynomial, a primitive element and a
self-dual basis ``theta_1..theta_n`` (``tr(theta_i theta_j) = delta_ij``),
which fixes how field labels split into per-qubit bits.
"""
from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    DegreeMismatchError,
    InverseOfZeroError,
    NoSelfDualBasisFound,
    ReduciblePolynomialError,
)

MIN_QUBITS = 2
MAX_QUBITS = 6

DEFAULT_POLYS = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
}


def _degree(poly: int) -> int:
    return poly.bit_length() - 1


def _poly_mod(a: int, m: int) -> int:
    """Remainder of GF(2)[x] division ``a mod m``."""
    dm = _degree(m)
    while a and _degree(a) >= dm:
        a ^= m << (_degree(a) - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every GF(2) polynomial of degree ``1..deg/2``."""
    deg = _degree(poly)
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if _poly_mod(poly, divisor) == 0:
                return False
    return True


def _mulmod(a: int, b: int, poly: int, n: int) -> int:
    p = 0
    top = 1 << n
    while b:
        if b & 1:
            p ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return p


class Field:
    """The field GF(2^n) with a fixed irreducible polynomial.

    Parameters
    ----------
    n : int
        Number of qubits / extension degree, ``2 <= n <= 6``.
    irreducible_poly : int, optional
        Bitmask of a degree-``n`` irreducible polynomial. Defaults to
        :data:`DEFAULT_POLYS` for ``n <= 4``.
    self_dual_basis : sequence of int, optional
        Override for the self-dual basis; validated on construction.

    Notes
    -----
    Instances are immutable after ``__init__``; every table is computed once.
    """

    def __init__(self, n: int, irreducible_poly: int | None = None,
                 self_dual_basis: Sequence[int] | None = None):
        if not MIN_QUBITS <= n <= MAX_QUBITS:
            raise ValueError(f"n must lie in [{MIN_QUBITS}, {MAX_QUBITS}], got {n}")
        if irreducible_poly is None:
            if n not in DEFAULT_POLYS:
                raise ValueError(f"no default polynomial for n={n}; pass irreducible_poly")
            irreducible_poly = DEFAULT_POLYS[n]
        irreducible_poly = int(irreducible_poly)
        if _degree(irreducible_poly) != n:
            raise DegreeMismatchError(
                f"polynomial {irreducible_poly:#b} has degree "
                f"{_degree(irreducible_poly)}, expected {n}")
        if not is_irreducible(irreducible_poly):
            raise ReduciblePolynomialError(
                f"polynomial {irreducible_poly:#b} is reducible over GF(2)")

        self.n = n
        self.order = 1 << n
        self.poly = irreducible_poly

        q = self.order
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                mul[a, b] = mul[b, a] = _mulmod(a, b, irreducible_poly, n)
        mul.setflags(write=False)
        self._mul = mul

        # trace by repeated squaring, then memoized
        trace = np.zeros(q, dtype=np.int64)
        for a in range(q):
            acc, x = 0, a
            for _ in range(n):
                acc ^= x
                x = int(mul[x, x])
            if acc not in (0, 1):
                raise AssertionError(f"trace of {a} left the prime field: {acc}")
            trace[a] = acc
        trace.setflags(write=False)
        self._trace = trace

        self.primitive_element = self._find_primitive()
        exp = [1]
        for _ in range(q - 2):
            exp.append(int(mul[exp[-1], self.primitive_element]))
        self._exp = tuple(exp)
        self._log = {v: k for k, v in enumerate(exp)}

        if self_dual_basis is None:
            basis = find_self_dual_basis(self)
        else:
            basis = tuple(int(t) for t in self_dual_basis)
            if not is_self_dual(self, basis):
                raise ValueError(f"{basis} is not a self-dual basis of GF(2^{n})")
        self.self_dual_basis: tuple[int, ...] = basis

    # -- construction helpers --------------------------------------------

    def _find_primitive(self) -> int:
        target = self.order - 1
        for g in range(2, self.order):
            x, k = g, 1
            while x != 1:
                x = int(self._mul[x, g])
                k += 1
            if k == target:
                return g
        raise AssertionError("multiplicative group has no generator")

    # -- arithmetic ----------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self._mul[a, b])

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inverse(a), -k)
        result = 1
        while k:
            if k & 1:
                result = int(self._mul[result, a])
            a = int(self._mul[a, a])
            k >>= 1
        return result

    def inverse(self, a: int) -> int:
        if a == 0:
            raise InverseOfZeroError("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, r: int) -> int:
        """``a ** (2 ** r)`` with ``r`` taken mod ``n``."""
        for _ in range(r % self.n):
            a = int(self._mul[a, a])
        return a

    def sigma(self, k: int) -> int:
        """The element ``sigma ** k`` for the primitive element ``sigma``."""
        return self._exp[k % (self.order - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero is undefined")
        return self._log[a]

    def trace(self, a: int) -> int:
        return int(self._trace[a])

    def character(self, a: int) -> int:
        """Additive character ``(-1) ** tr(a)``."""
        return 1 - 2 * int(self._trace[a])

    def expand(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` in the self-dual basis, ``a_i = tr(a theta_i)``."""
        return tuple(int(self._trace[self._mul[a, t]]) for t in self.self_dual_basis)

    def reconstruct(self, bits: Iterable[int]) -> int:
        acc = 0
        for bit, t in zip(bits, self.self_dual_basis):
            if bit & 1:
                acc ^= t
        return acc

    # -- vectorised tables -----------------------------------------------

    @property
    def mul_table(self) -> np.ndarray:
        return self._mul

    @property
    def trace_table(self) -> np.ndarray:
        return self._trace

    @cached_property
    def character_table(self) -> np.ndarray:
        """``chi(a * b)`` for all pairs, as a ``q x q`` array of +-1."""
        return 1 - 2 * self._trace[self._mul]

    @cached_property
    def expansion_table(self) -> np.ndarray:
        """``q x n`` array of self-dual coordinates of every element."""
        table = np.array([self.expand(a) for a in self.elements()], dtype=np.int64)
        table.setflags(write=False)
        return table

    # -- display / comparison ------------------------------------------------

    def format(self, a: int, display: str = "int") -> str:
        if display == "int":
            return str(a)
        if display == "power":
            if a == 0:
                return "0"
            k = self.log(a)
            return "1" if k == 0 else ("σ" if k == 1 else f"σ^{k}")
        raise ValueError(f"unknown display mode {display!r}")

    def _key(self):
        return (self.n, self.poly, self.self_dual_basis)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Field(n={self.n}, irreducible_poly={self.poly:#b}, "
                f"self_dual_basis={self.self_dual_basis})")


def is_self_dual(field: Field, basis: Sequence[int]) -> bool:
    if len(basis) != field.n:
        return False
    gram = [[field.trace(field.mul(a, b)) for b in basis] for a in basis]
    return gram == np.eye(field.n, dtype=int).tolist()


def find_self_dual_basis(field: Field) -> tuple[int, ...]:
    """Lexicographically smallest ordered tuple with ``tr(t_i t_j) = delta_ij``.

    Any permutation of a valid tuple is valid, so the smallest tuple is the
    ascending one; the depth-first search visits candidates in that order.
    """
    tr = field.trace_table
    mul = field.mul_table
    candidates = [a for a in range(1, field.order) if tr[mul[a, a]] == 1]

    def extend(chosen: list[int], start: int):
        if len(chosen) == field.n:
            return tuple(chosen)
        for idx in range(start, len(candidates)):
            c = candidates[idx]
            if all(tr[mul[c, t]] == 0 for t in chosen):
                found = extend(chosen + [c], idx + 1)
                if found:
                    return found
        return None

    basis = extend([], 0)
    if basis is None or not is_self_dual(field, basis):
        raise NoSelfDualBasisFound(f"no self-dual basis for {field!r}")
    # orthonormal under the trace form implies GF(2)-independence; check anyway
    span = set()
    for bits in itertools.product((0, 1), repeat=field.n):
        acc = 0
        for bit, t in zip(bits, basis):
            acc ^= t if bit else 0
        span.add(acc)
    if len(span) != field.order:
        raise NoSelfDualBasisFound("self-dual candidate is not a basis")
    return basis


# -- linearized polynomials -------------------------------------------------
#
# A coefficient list ``c`` of length n encodes x -> sum_r c[r] * x**(2**r).
# These maps are exactly the GF(2)-linear maps of the field, closed under
# addition and composition.


def lin_eval(field: Field, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    xr = x
    for c in coeffs:
        if c:
            acc ^= field.mul(c, xr)
        xr = field.mul(xr, xr)
    return acc


def lin_table(field: Field, coeffs: Sequence[int]) -> np.ndarray:
    """Values of the linearized map at every field element."""
    return np.array([lin_eval(field, coeffs, x) for x in field.elements()], dtype=np.int64)


def lin_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x ^ y for x, y in zip(a, b))


def lin_compose(field: Field, outer: Sequence[int], inner: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of ``outer(inner(x))``."""
    n = field.n
    out = [0] * n
    for s, gs in enumerate(outer):
        if not gs:
            continue
        for r, fr in enumerate(inner):
            out[(r + s) % n] ^= field.mul(gs, field.frobenius(fr, s))
    return tuple(out)


def lin_scale_arg(field: Field, coeffs: Sequence[int], lam: int) -> tuple[int, ...]:
    """Coefficients of ``x -> g(lam * x)``."""
    return tuple(field.mul(c, field.frobenius(lam, r)) for r, c in enumerate(coeffs))


def lin_identity(field: Field, scale: int = 1) -> tuple[int, ...]:
    return (scale,) + (0,) * (field.n - 1)


def lin_zero(field: Field) -> tuple[int, ...]:
    return (0,) * field.n


def lin_coeffs_from_table(field: Field, table: Sequence[int]) -> tuple[int, ...]:
    """Linearized coefficients of an additive map given by its value table.

    With a self-dual basis ``x = sum_i tr(x t_i) t_i``, so the coefficient of
    ``x ** (2 ** r)`` is ``sum_i L(t_i) * t_i ** (2 ** r)``.
    """
    coeffs = []
    for r in range(field.n):
        acc = 0
        for t in field.self_dual_basis:
            acc ^= field.mul(int(table[t]), field.frobenius(t, r))
        coeffs.append(acc)
    coeffs = tuple(coeffs)
    if any(lin_eval(field, coeffs, x) != int(table[x]) for x in field.elements()):
        raise ValueError("table is not an additive (GF(2)-linear) map")
    return coeffs
