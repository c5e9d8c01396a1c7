"""Exact linear algebra over small prime fields.

Matrices are numpy arrays of residues. Row reduction dispatches on the
characteristic: GF(2) rows are bit-packed into uint64 words, GF(3) rows are
bit-sliced into a (plus, minus) pair of words, and every other p uses a dense
int32 kernel with lazy reduction. All kernels are numba-compiled.
"""

from __future__ import annotations

import numpy as np
from numba import njit

WORD = 64


# ---------------------------------------------------------------- packing

def pack_gf2(A: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix row-wise into uint64 words, column c -> bit c % 64 of word c // 64."""
    m, n = A.shape
    nw = max((n + WORD - 1) // WORD, 1)
    padded = np.zeros((m, nw * WORD), dtype=np.uint8)
    padded[:, :n] = A & 1
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).reshape(m, nw).copy()


def unpack_gf2(W: np.ndarray, n: int) -> np.ndarray:
    m, nw = W.shape
    bits = np.unpackbits(np.ascontiguousarray(W).view(np.uint8).reshape(m, nw * 8), axis=1, bitorder="little")
    return bits[:, :n].astype(np.uint8)


def pack_gf3(A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Bit-slice a matrix over GF(3) into (plus, minus) planes: 1 -> plus, 2 -> minus."""
    return pack_gf2((A == 1).astype(np.uint8)), pack_gf2((A == 2).astype(np.uint8))


def unpack_gf3(P: np.ndarray, N: np.ndarray, n: int) -> np.ndarray:
    return (unpack_gf2(P, n) + 2 * unpack_gf2(N, n)).astype(np.uint8)


# ---------------------------------------------------------------- kernels

@njit(cache=True)
def _rref_dense(A, p, inv):
    # A is int32; rows other than the pivot row are reduced lazily, the bound
    # p + rank * p * (p - 1) stays far below 2^31 for p <= 101.
    m, n = A.shape
    piv = np.empty(min(m, n), np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            v = A[i, c] % p
            A[i, c] = v
            if v != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, n):
                t = A[r, j]
                A[r, j] = A[pr, j]
                A[pr, j] = t
        s = inv[A[r, c]]
        for j in range(c, n):
            A[r, j] = (A[r, j] * s) % p
        for i in range(m):
            if i != r:
                f = A[i, c] % p
                if f != 0:
                    g = p - f
                    for j in range(c, n):
                        A[i, j] += g * A[r, j]
                else:
                    A[i, c] = 0
        piv[r] = c
        r += 1
    for i in range(r):
        for j in range(n):
            A[i, j] = A[i, j] % p
    return piv[:r]


@njit(cache=True)
def _rref_gf2(W, n):
    m, nw = W.shape
    piv = np.empty(min(m, n), np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        w = c // 64
        bit = np.uint64(1) << np.uint64(c % 64)
        pr = -1
        for i in range(r, m):
            if W[i, w] & bit:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(w, nw):
                t = W[r, j]
                W[r, j] = W[pr, j]
                W[pr, j] = t
        for i in range(m):
            if i != r and (W[i, w] & bit):
                for j in range(w, nw):
                    W[i, j] ^= W[r, j]
        piv[r] = c
        r += 1
    return piv[:r]


@njit(cache=True)
def _rref_gf3(P, N, n):
    m, nw = P.shape
    piv = np.empty(min(m, n), np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        w = c // 64
        bit = np.uint64(1) << np.uint64(c % 64)
        pr = -1
        for i in range(r, m):
            if (P[i, w] | N[i, w]) & bit:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(w, nw):
                t = P[r, j]
                P[r, j] = P[pr, j]
                P[pr, j] = t
                t = N[r, j]
                N[r, j] = N[pr, j]
                N[pr, j] = t
        if N[r, w] & bit:
            # scale the pivot row by 2 = -1
            for j in range(w, nw):
                t = P[r, j]
                P[r, j] = N[r, j]
                N[r, j] = t
        for i in range(m):
            if i == r:
                continue
            if P[i, w] & bit:
                # row_i -= row_r  (add the negated pivot row)
                for j in range(w, nw):
                    p1 = P[i, j]
                    n1 = N[i, j]
                    p2 = N[r, j]
                    n2 = P[r, j]
                    z1 = ~(p1 | n1)
                    z2 = ~(p2 | n2)
                    P[i, j] = (p1 & z2) | (p2 & z1) | (n1 & n2)
                    N[i, j] = (n1 & z2) | (n2 & z1) | (p1 & p2)
            elif N[i, w] & bit:
                # row_i += row_r
                for j in range(w, nw):
                    p1 = P[i, j]
                    n1 = N[i, j]
                    p2 = P[r, j]
                    n2 = N[r, j]
                    z1 = ~(p1 | n1)
                    z2 = ~(p2 | n2)
                    P[i, j] = (p1 & z2) | (p2 & z1) | (n1 & n2)
                    N[i, j] = (n1 & z2) | (n2 & z1) | (p1 & p2)
        piv[r] = c
        r += 1
    return piv[:r]


_INV_CACHE: dict[int, np.ndarray] = {}


def _inverse_table(p: int) -> np.ndarray:
    t = _INV_CACHE.get(p)
    if t is None:
        t = np.zeros(p, dtype=np.int32)
        for a in range(1, p):
            t[a] = pow(a, -1, p)
        _INV_CACHE[p] = t
    return t


# ---------------------------------------------------------------- public API

def as_residues(A, p: int) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return np.ascontiguousarray(np.mod(A, p).astype(np.uint8))


def rref(A, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form over GF(p).

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    A = as_residues(A, p)
    m, n = A.shape
    if m == 0 or n == 0:
        return np.zeros((0, n), dtype=np.uint8), np.zeros(0, dtype=np.int64)
    if p == 2:
        W = pack_gf2(A)
        piv = _rref_gf2(W, n)
        R = unpack_gf2(W[: len(piv)], n)
    elif p == 3:
        P, N = pack_gf3(A)
        piv = _rref_gf3(P, N, n)
        R = unpack_gf3(P[: len(piv)], N[: len(piv)], n)
    else:
        work = A.astype(np.int32)
        piv = _rref_dense(work, p, _inverse_table(p))
        R = work[: len(piv)].astype(np.uint8)
    return R, np.asarray(piv, dtype=np.int64)


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    # eliminate along the shorter side
    if A.ndim == 2 and A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0} over GF(p)."""
    A = as_residues(A, p)
    n = A.shape[1]
    R, piv = rref(A, p)
    free = np.setdiff1d(np.arange(n), piv)
    K = np.zeros((len(free), n), dtype=np.int64)
    if len(free):
        K[np.arange(len(free)), free] = 1
        if len(piv):
            # x[piv[i]] = -R[i, f]
            K[:, piv] = (-R[:, free].astype(np.int64).T) % p
    return K.astype(np.uint8)


def row_space(A, p: int) -> np.ndarray:
    return rref(A, p)[0]


def left_nullspace(A, p: int) -> np.ndarray:
    """Basis of {y : y A = 0}."""
    return nullspace(np.asarray(A).T, p)


def matmul(A, B, p: int) -> np.ndarray:
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64)) % p


def complement_rows(span, candidates, p: int) -> list[int]:
    """Indices of ``candidates`` rows that extend the row space of ``span``, greedily in order."""
    span = np.asarray(span)
    candidates = np.asarray(candidates)
    n = candidates.shape[1] if candidates.ndim == 2 else 0
    if candidates.shape[0] == 0:
        return []
    base = rank(span, p) if span.size else 0
    # stack candidates after the span and track pivots landing in candidate rows
    keep = []
    current = span.reshape(-1, n) if span.size else np.zeros((0, n), dtype=np.uint8)
    R, _ = rref(current, p) if current.shape[0] else (current, None)
    for idx in range(candidates.shape[0]):
        trial = np.vstack([R, candidates[idx : idx + 1]]) if R.shape[0] else candidates[idx : idx + 1]
        R2, piv2 = rref(trial, p)
        if len(piv2) > base:
            keep.append(idx)
            R, base = R2, len(piv2)
    return keep
