"""Independent reference implementations used as test oracles.

Nothing here imports the package, so agreement is a genuine cross-check.
"""
from functools import reduce
from itertools import product

import numpy as np


def clmul_mod(a: int, b: int, poly: int) -> int:
    """Schoolbook carry-less product reduced by ``poly`` (list-of-bits form)."""
    n = poly.bit_length() - 1
    prod = [0] * (2 * n)
    for i in range(n):
        for j in range(n):
            prod[i + j] ^= ((a >> i) & 1) & ((b >> j) & 1)
    pbits = [(poly >> k) & 1 for k in range(n + 1)]
    for deg in range(2 * n - 1, n - 1, -1):
        if prod[deg]:
            for k in range(n + 1):
                prod[deg - n + k] ^= pbits[k]
    return sum(bit << k for k, bit in enumerate(prod[:n]))


def trace(a: int, poly: int) -> int:
    n = poly.bit_length() - 1
    acc, x = 0, a
    for _ in range(n):
        acc ^= x
        x = clmul_mod(x, x, poly)
    return acc


def smallest_self_dual_basis(poly: int) -> tuple[int, ...]:
    """Brute force over increasing tuples, first hit wins."""
    n = poly.bit_length() - 1
    elems = range(1, 1 << n)
    from itertools import combinations
    for combo in combinations(elems, n):
        if all(trace(clmul_mod(x, y, poly), poly) == (x == y) for x in combo for y in combo):
            return combo
    raise AssertionError("no self-dual basis")


def qubit_paulis(a_bits, b_bits) -> np.ndarray:
    z = np.diag([1.0, -1.0]).astype(complex)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    mats = [np.linalg.matrix_power(z, a) @ np.linalg.matrix_power(x, b)
            for a, b in zip(a_bits, b_bits)]
    return reduce(np.kron, mats)


def product_blocks(psi: np.ndarray, n: int, tol: float = 1e-9):
    """Finest qubit partition over which ``psi`` is a product state.

    Uses reduced-state purities: a block is split off iff ``Tr rho_B^2 = 1``.
    Qubit 1 is the most significant tensor factor.
    """
    t = psi.reshape([2] * n)

    def pure(block):
        rest = [k for k in range(n) if k not in block]
        m = np.transpose(t, list(block) + rest).reshape(1 << len(block), -1)
        rho = m @ m.conj().T
        return abs(np.trace(rho @ rho).real - 1) < tol

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1:]
            yield [[first]] + part

    best = None
    for part in partitions(list(range(n))):
        if all(pure(b) for b in part) and (best is None or len(part) > len(best)):
            best = part
    return tuple(sorted(len(b) for b in best))


def joint_eigenstates(ops) -> list[np.ndarray]:
    """Common eigenvectors of commuting Hermitian generators via projectors."""
    d = ops[0].shape[0]
    out = []
    for signs in product((1, -1), repeat=len(ops)):
        proj = np.eye(d, dtype=complex)
        for s, h in zip(signs, ops):
            proj = proj @ (np.eye(d) + s * h) / 2
        if np.trace(proj).real > 0.5:
            w, v = np.linalg.eigh(proj)
            out.append(v[:, -1])
    return out
