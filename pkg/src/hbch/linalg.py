"""Exact linear algebra over a FieldCtx (encoded-element matrices).

Matrices are numpy int64 arrays of element encodings.  Gaussian elimination
uses first-nonzero pivoting and produces the reduced row echelon form, so
equal row spaces have equal echelon matrices.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .gf import FieldCtx


def rref(field: FieldCtx, mat) -> tuple[np.ndarray, int]:
    """Reduced row echelon form (a copy) and the rank."""
    mat = np.atleast_2d(np.asarray(mat, dtype=np.int64))
    return _kernels.rref(mat, field.order, field.zech, field.half)


def rank(field: FieldCtx, mat) -> int:
    return rref(field, mat)[1]


def row_basis(field: FieldCtx, mat) -> np.ndarray:
    """Canonical basis of the row space: trimmed RREF."""
    red, rk = rref(field, mat)
    basis = red[:rk]
    basis.setflags(write=False)
    return basis


def pivot_columns(mat: np.ndarray, rank_: int) -> list[int]:
    """Leading-entry columns of an RREF matrix."""
    pivots = []
    for i in range(rank_):
        nz = np.nonzero(mat[i])[0]
        pivots.append(int(nz[0]))
    return pivots


def null_space(field: FieldCtx, mat) -> np.ndarray:
    """Basis of the right kernel {x : mat . x = 0}, one row per basis vector."""
    mat = np.atleast_2d(np.asarray(mat, dtype=np.int64))
    ncols = mat.shape[1]
    red, rk = rref(field, mat)
    pivots = pivot_columns(red, rk)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        for i, c in enumerate(pivots):
            basis[bi, c] = field.neg(int(red[i, f]))
    return basis


def matmul(field: FieldCtx, a, b) -> np.ndarray:
    """Matrix product a . b over the field."""
    bt = np.ascontiguousarray(np.asarray(b, dtype=np.int64).T)
    return _kernels.hgram(np.asarray(a, dtype=np.int64), bt, 1,
                          field.order, field.zech, field.half)


def conj_pow_matrix(field: FieldCtx, mat, e: int) -> np.ndarray:
    """Entrywise e-th power (Frobenius-style conjugation)."""
    return _kernels.vpow(np.asarray(mat, dtype=np.int64), e, field.order)


def hermitian_products(field: FieldCtx, a, b, conj_pow: int) -> np.ndarray:
    """Matrix M with M[i, j] = sum_t a[i, t] * b[j, t]**conj_pow."""
    return _kernels.hgram(np.asarray(a, dtype=np.int64),
                          np.asarray(b, dtype=np.int64), conj_pow,
                          field.order, field.zech, field.half)


def row_space_equal(field: FieldCtx, a, b) -> bool:
    ba = row_basis(field, a)
    bb = row_basis(field, b)
    return ba.shape == bb.shape and bool(np.array_equal(ba, bb))


def in_row_space(field: FieldCtx, rows, vec) -> bool:
    base = rank(field, rows)
    stacked = np.vstack([np.atleast_2d(rows), np.atleast_2d(vec)])
    return rank(field, stacked) == base


def min_weight_exhaustive(field: FieldCtx, gen) -> int:
    """Exact minimum nonzero-codeword weight of the span of gen.

    The caller bounds order**k; gen rows should be linearly independent.
    """
    gen = np.atleast_2d(np.asarray(gen, dtype=np.int64))
    k, n = gen.shape
    if k == 0:
        return 0
    encs = np.arange(field.order, dtype=np.int64)
    scaled = _kernels.vmul(encs[None, :, None], gen[:, None, :], field.order)
    return _kernels.min_weight(scaled, field.order, field.zech, field.half)
