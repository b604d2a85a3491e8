"""Dense exact linear algebra over small prime fields GF(p).

All matrices are numpy int64 arrays with entries reduced mod p.  Sizes stay
small (a few hundred rows at the very most), so plain Gaussian elimination
is exact and fast enough.  p defaults to 2; p=3 is used for the cross-field
checks.
"""

from __future__ import annotations

import numpy as np


def normalize(M, p: int = 2) -> np.ndarray:
    """Coerce M to a 2-d int64 array with entries in 0..p-1."""
    A = np.atleast_2d(np.asarray(M, dtype=np.int64))
    return A % p


def rref(M, p: int = 2) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of M over GF(p).

    Returns (R, pivots) where R holds only the nonzero rows and pivots[i]
    is the pivot column of row i.
    """
    R = normalize(M, p).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if R[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R[:len(pivots)], pivots


def rank(M, p: int = 2) -> int:
    M = normalize(M, p)
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def nullspace(M, p: int = 2) -> np.ndarray:
    """Basis of the right nullspace of M, one vector per row."""
    M = normalize(M, p)
    rows, cols = M.shape
    R, pivots = rref(M, p)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-int(R[i, fc])) % p
    return basis


def reduce_rows(R: np.ndarray, pivots: list[int], v, p: int = 2) -> np.ndarray:
    """Reduce vector v modulo the row space given in RREF form."""
    w = np.asarray(v, dtype=np.int64).copy() % p
    for i, c in enumerate(pivots):
        if w[c]:
            w = (w - w[c] * R[i]) % p
    return w


def in_rowspace(R: np.ndarray, pivots: list[int], v, p: int = 2) -> bool:
    return not reduce_rows(R, pivots, v, p).any()


def solve(A, b, p: int = 2):
    """One solution x of A x = b over GF(p), or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    A = normalize(A, p)
    b = np.asarray(b, dtype=np.int64).reshape(-1) % p
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, pivots = rref(aug, p)
    ncols = A.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, ncols]
    return x


def intersection_dim(A, B, p: int = 2) -> int:
    """Dimension of (row space of A) ∩ (row space of B)."""
    A = normalize(A, p)
    B = normalize(B, p)
    if A.size == 0 or B.size == 0:
        return 0
    ra, rb = rank(A, p), rank(B, p)
    rsum = rank(np.concatenate([A, B]), p)
    return ra + rb - rsum
