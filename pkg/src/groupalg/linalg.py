"""Row reduction and related linear algebra over a finite field.

Matrices are integer numpy arrays of field codes (see :mod:`groupalg.gf`).
"""

from __future__ import annotations

import numpy as np

from .gf import Field


def as_matrix(rows, width: int) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    return m.reshape(-1, width)


def rref(F: Field, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns ``(rows, pivot_columns)``.

    Zero rows are dropped, so ``len(rows)`` is the rank.
    """
    M = np.array(M, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        piv = M[r, c]
        if piv != 1:
            M[r] = F.mul(M[r], F.inv(piv))
        col = M[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            M[rows] = F.sub(M[rows], F.mul(col[rows, None], M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: Field, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def reduce_vector(F: Field, basis: np.ndarray, pivots: list[int], v) -> np.ndarray:
    """Remainder of ``v`` modulo the row space of an RREF ``basis``."""
    v = np.array(v, dtype=np.int64)
    if not pivots:
        return v
    coeffs = v[..., pivots]
    correction = matmul(F, coeffs.reshape(-1, len(pivots)), basis).reshape(v.shape)
    return F.sub(v, correction)


def matmul(F: Field, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[-1] == 0:
        return np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    if F.n == 1 and F.p < 2**20:
        # products < 2^40, sums of fewer than 2^23 of them fit in int64
        return (A @ B) % F.p
    out = F.mul(A[..., 0, None], B[0])
    for k in range(1, A.shape[-1]):
        out = F.add(out, F.mul(A[..., k, None], B[k]))
    return out


def nullspace(F: Field, M) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : M x = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    R, pivots = rref(F, M) if M.shape[0] else (np.zeros((0, ncols), dtype=np.int64), [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = F.neg(R[r, f])
    return basis


def solve(F: Field, M, b) -> np.ndarray | None:
    """One solution of ``M x = b``, or None when inconsistent."""
    M = np.asarray(M, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([M, b])
    R, pivots = rref(F, aug)
    ncols = M.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, ncols]
    return x


def inverse(F: Field, M) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    R, pivots = rref(F, np.hstack([M, np.eye(n, dtype=np.int64)]))
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def intersect_rowspaces(F: Field, A, B) -> np.ndarray:
    """RREF basis of ``rowspace(A) ∩ rowspace(B)``."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, A.shape[1] if A.ndim == 2 else B.shape[1]), dtype=np.int64)
    # x A = y B  <=>  (x, -y) [A; B] = 0
    stacked = np.vstack([A, B])
    kernel = nullspace(F, stacked.T)
    if kernel.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    vecs = matmul(F, kernel[:, : A.shape[0]], A)
    return rref(F, vecs)[0]
