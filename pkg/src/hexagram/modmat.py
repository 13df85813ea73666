"""Exact linear algebra over F_p on numpy int64 arrays.

All routines keep every intermediate value inside int64: entries are
reduced to [0, p) and a dot product of length D satisfies
D * (p-1)^2 < 2^63 for the primes and dimensions this package uses; the
multiply routine checks the bound and falls back to object arithmetic
if it would be violated.
"""

from __future__ import annotations

import numpy as np


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    inner = a.shape[-1]
    if inner * (p - 1) ** 2 < 2**63:
        return (a @ b) % p
    out = (a.astype(object) @ b.astype(object)) % p
    return out.astype(np.int64)


def mat_pow_mod(m: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(m.shape[0], dtype=np.int64)
    base = m % p
    while e:
        if e & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        e >>= 1
    return result


def rref_mod(m: np.ndarray, p: int):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    a = (m % p).astype(np.int64).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        other = np.nonzero(a[:, c])[0]
        for j in other:
            if j != r:
                a[j] = (a[j] - a[j, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace_mod(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right kernel, one vector per row."""
    a, pivots = rref_mod(m, p)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-int(a[r, fc])) % p
    return basis


def solve_mod(m: np.ndarray, rhs: np.ndarray, p: int) -> np.ndarray:
    """Solve m x = rhs for square invertible m."""
    d = m.shape[0]
    aug = np.concatenate([m % p, rhs.reshape(d, -1) % p], axis=1)
    a, pivots = rref_mod(aug, p)
    if pivots[: d] != list(range(d)):
        raise np.linalg.LinAlgError("singular matrix over F_p")
    x = a[:d, d:]
    return x.reshape(rhs.shape)


def inv_mod(m: np.ndarray, p: int) -> np.ndarray:
    d = m.shape[0]
    return solve_mod(m, np.eye(d, dtype=np.int64), p)
