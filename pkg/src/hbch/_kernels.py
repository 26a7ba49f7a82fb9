"""Hot numeric kernels with a numba backend and a pure-numpy fallback.

Field elements are encoded as integers: 0 is the zero element and e >= 1
stands for g**(e-1), g the fixed primitive element.  Multiplication and
inversion are then index arithmetic modulo Q-1 and addition is a single
Zech-logarithm lookup, so every kernel needs only the field order Q, the
Zech table and the discrete log of -1 (`half`, which is 0 in
characteristic 2).

Set HBCH_NO_NUMBA=1 to select the vectorised numpy fallback.  The default
backend compiles the scalar loops with numba @njit.  Both backends are
exact and produce identical results; benchmarks/bench_kernels.py compares
their speed.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_disabled() -> bool:
    return os.environ.get("HBCH_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


if _numba_disabled():
    BACKEND = "numpy"
else:
    try:
        from numba import njit

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - numba is a declared dependency
        BACKEND = "numpy"


# ---------------------------------------------------------------------------
# vectorised element operations (shared by the numpy backend and the wrappers)

def vmul(a, b, order):
    """Elementwise field product of two encoded arrays."""
    qm1 = order - 1
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = (a - 1 + b - 1) % qm1 + 1
    return np.where((a == 0) | (b == 0), 0, out)


def vadd(a, b, order, zech):
    """Elementwise field sum of two encoded arrays."""
    qm1 = order - 1
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    az = a == 0
    bz = b == 0
    d = np.where(az | bz, 0, (b - a) % qm1)
    z = zech[d]
    s = np.where(z < 0, 0, (a - 1 + z) % qm1 + 1)
    return np.where(az, b, np.where(bz, a, s))


def vneg(a, order, half):
    """Elementwise additive inverse."""
    qm1 = order - 1
    a = np.asarray(a, dtype=np.int64)
    return np.where(a == 0, 0, (a - 1 + half) % qm1 + 1)


def vpow(a, e, order):
    """Elementwise e-th power, e a nonnegative integer (0**0 == 1)."""
    qm1 = order - 1
    a = np.asarray(a, dtype=np.int64)
    if e == 0:
        return np.ones_like(a)
    out = ((a - 1) * (e % qm1)) % qm1 + 1
    return np.where(a == 0, 0, out)


# ---------------------------------------------------------------------------
# antilog table construction

def _exp_table_loop(p, m, mod_digits, order):
    exp = np.zeros(order - 1, dtype=np.int64)
    digits = np.zeros(m, dtype=np.int64)
    digits[0] = 1
    powers = np.zeros(m, dtype=np.int64)
    w = 1
    for j in range(m):
        powers[j] = w
        w *= p
    red = np.zeros(m, dtype=np.int64)
    for j in range(m):
        red[j] = (-mod_digits[j]) % p
    for i in range(order - 1):
        v = 0
        for j in range(m):
            v += digits[j] * powers[j]
        exp[i] = v
        top = digits[m - 1]
        for j in range(m - 1, 0, -1):
            digits[j] = (digits[j - 1] + top * red[j]) % p
        digits[0] = (top * red[0]) % p
    return exp


def _exp_table_numpy(p, m, mod_digits, order):
    if p != 2:
        # odd-characteristic fields stay small; a plain loop is good enough
        return _exp_table_loop(p, m, mod_digits, order)
    mod_int = 0
    for j in range(m + 1):
        mod_int |= int(mod_digits[j]) << j
    out = np.zeros(order - 1, dtype=np.int64)
    out[0] = 1
    x = 1
    seed = min(order - 1, 1024)
    for i in range(1, seed):
        x <<= 1
        if x & order:
            x ^= mod_int
        out[i] = x
    filled = seed
    while filled < order - 1:
        # out[filled + i] = out[i] * out[filled]; carry-less multiply by a constant
        const = int(out[filled - 1])
        const <<= 1
        if const & order:
            const ^= mod_int
        take = min(filled, order - 1 - filled)
        acc = np.zeros(take, dtype=np.int64)
        t = out[:take].copy()
        cc = const
        while cc:
            if cc & 1:
                acc ^= t
            cc >>= 1
            t <<= 1
            t ^= ((t >> m) & 1) * mod_int
        out[filled:filled + take] = acc
        filled += take
    return out


# ---------------------------------------------------------------------------
# reduced row echelon form (in place), returns the rank

def _rref_loop(mat, order, zech, half):
    qm1 = order - 1
    nrows, ncols = mat.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                t = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = t
        a = mat[r, c]
        if a != 1:
            inv = (qm1 - (a - 1)) % qm1 + 1
            for j in range(c, ncols):
                e = mat[r, j]
                if e != 0:
                    mat[r, j] = (e - 1 + inv - 1) % qm1 + 1
        for i in range(nrows):
            if i == r:
                continue
            f = mat[i, c]
            if f == 0:
                continue
            fn = (f - 1 + half) % qm1  # dlog of -f
            for j in range(c, ncols):
                e = mat[r, j]
                if e == 0:
                    continue
                t = (fn + e - 1) % qm1 + 1
                b = mat[i, j]
                if b == 0:
                    mat[i, j] = t
                else:
                    d = (t - b) % qm1
                    z = zech[d]
                    if z < 0:
                        mat[i, j] = 0
                    else:
                        mat[i, j] = (b - 1 + z) % qm1 + 1
        r += 1
    return r


def _rref_numpy(mat, order, zech, half):
    qm1 = order - 1
    nrows, ncols = mat.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        a = int(mat[r, c])
        if a != 1:
            inv = (qm1 - (a - 1)) % qm1 + 1
            mat[r] = vmul(mat[r], inv, order)
        col = mat[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            prod = vmul(vneg(col[rows], order, half)[:, None], mat[r][None, :], order)
            mat[rows] = vadd(mat[rows], prod, order, zech)
        r += 1
    return r


# ---------------------------------------------------------------------------
# Hermitian-style products: out[i, j] = sum_t a[i, t] * b[j, t]**conj_pow

def _hgram_loop(a, b, conj_pow, order, zech, half):
    qm1 = order - 1
    ka, n = a.shape
    kb = b.shape[0]
    out = np.zeros((ka, kb), dtype=np.int64)
    for i in range(ka):
        for j in range(kb):
            acc = 0
            for t in range(n):
                x = a[i, t]
                y = b[j, t]
                if x == 0 or y == 0:
                    continue
                yq = ((y - 1) * conj_pow) % qm1
                prod = (x - 1 + yq) % qm1 + 1
                if acc == 0:
                    acc = prod
                else:
                    d = (prod - acc) % qm1
                    z = zech[d]
                    if z < 0:
                        acc = 0
                    else:
                        acc = (acc - 1 + z) % qm1 + 1
            out[i, j] = acc
    return out


def _hgram_numpy(a, b, conj_pow, order, zech, half):
    bq = vpow(b, conj_pow, order)
    ka = a.shape[0]
    out = np.zeros((ka, bq.shape[0]), dtype=np.int64)
    for i in range(ka):
        prods = vmul(a[i][None, :], bq, order)
        while prods.shape[1] > 1:
            w = prods.shape[1]
            h = w // 2
            folded = vadd(prods[:, :h], prods[:, w - h:], order, zech)
            if w % 2:
                folded = np.concatenate([prods[:, h:h + 1], folded], axis=1)
            prods = folded
        out[i] = prods[:, 0]
    return out


# ---------------------------------------------------------------------------
# exhaustive minimum nonzero codeword weight
#
# `scaled[i, c]` holds the row c * gen[i] for every element encoding c,
# so scaled[i, 0] is the zero row.

def _min_weight_loop(step, order, zech, half):
    qm1 = order - 1
    k = step.shape[0]
    n = step.shape[2]
    cw = np.zeros(n, dtype=np.int64)
    digits = np.zeros(k, dtype=np.int64)
    best = n + 1
    total = 1
    for _ in range(k):
        total *= order
    for _count in range(total - 1):
        pos = 0
        while digits[pos] == order - 1:
            digits[pos] = 0
            row = step[pos, order - 1]
            for j in range(n):
                e = row[j]
                if e == 0:
                    continue
                b = cw[j]
                if b == 0:
                    cw[j] = e
                else:
                    d = (e - b) % qm1
                    z = zech[d]
                    cw[j] = 0 if z < 0 else (b - 1 + z) % qm1 + 1
            pos += 1
        row = step[pos, digits[pos]]
        digits[pos] += 1
        for j in range(n):
            e = row[j]
            if e == 0:
                continue
            b = cw[j]
            if b == 0:
                cw[j] = e
            else:
                d = (e - b) % qm1
                z = zech[d]
                cw[j] = 0 if z < 0 else (b - 1 + z) % qm1 + 1
        w = 0
        for j in range(n):
            if cw[j] != 0:
                w += 1
        if 0 < w < best:
            best = w
    return best


def _min_weight_numpy(scaled, order, zech, half):
    k, q, n = scaled.shape
    lo = 1
    while lo < k and order ** (lo + 1) <= 65536:
        lo += 1
    lo_table = np.zeros((1, n), dtype=np.int64)
    for i in range(lo):
        blocks = [vadd(lo_table, scaled[i, c][None, :], order, zech) for c in range(q)]
        lo_table = np.concatenate(blocks, axis=0)
    hi_table = np.zeros((1, n), dtype=np.int64)
    for i in range(lo, k):
        blocks = [vadd(hi_table, scaled[i, c][None, :], order, zech) for c in range(q)]
        hi_table = np.concatenate(blocks, axis=0)
    best = n + 1
    for h in range(hi_table.shape[0]):
        words = vadd(lo_table, hi_table[h][None, :], order, zech)
        weights = np.count_nonzero(words, axis=1)
        if h == 0:
            weights = weights[1:]  # skip the all-zero message
        if weights.size:
            w = int(weights.min())
            if 0 < w < best:
                best = w
    return best


# ---------------------------------------------------------------------------
# backend dispatch

if BACKEND == "numba":
    _exp_table_jit = njit(cache=True)(_exp_table_loop)
    _rref_jit = njit(cache=True)(_rref_loop)
    _hgram_jit = njit(cache=True)(_hgram_loop)
    _min_weight_jit = njit(cache=True)(_min_weight_loop)


def exp_table(p, m, mod_digits, order):
    """Antilog table: poly-int values of g**i for i in [0, order-2]."""
    mod_digits = np.asarray(mod_digits, dtype=np.int64)
    if BACKEND == "numba":
        return _exp_table_jit(p, m, mod_digits, order)
    return _exp_table_numpy(p, m, mod_digits, order)


def rref(mat, order, zech, half):
    """Reduced row echelon form.  Returns (reduced copy, rank)."""
    work = np.ascontiguousarray(mat, dtype=np.int64).copy()
    if work.size == 0:
        return work, 0
    if BACKEND == "numba":
        rank = _rref_jit(work, order, zech, half)
    else:
        rank = _rref_numpy(work, order, zech, half)
    return work, int(rank)


def hgram(a, b, conj_pow, order, zech, half):
    """Matrix of sums  out[i, j] = sum_t a[i, t] * b[j, t]**conj_pow.

    conj_pow=1 gives the plain Euclidean product matrix a . b^T.
    """
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[0]), dtype=np.int64)
    if BACKEND == "numba":
        return _hgram_jit(a, b, conj_pow, order, zech, half)
    return _hgram_numpy(a, b, conj_pow, order, zech, half)


def min_weight(scaled, order, zech, half):
    """Exact minimum nonzero codeword weight.

    `scaled` has shape (k, order, n) with scaled[i, c] = c * gen[i].
    The caller is responsible for keeping order**k within budget.
    """
    scaled = np.ascontiguousarray(scaled, dtype=np.int64)
    if BACKEND == "numba":
        rolled = np.roll(scaled, -1, axis=1)
        step = vadd(rolled, vneg(scaled, order, half), order, zech)
        return int(_min_weight_jit(np.ascontiguousarray(step), order, zech, half))
    return int(_min_weight_numpy(scaled, order, zech, half))
