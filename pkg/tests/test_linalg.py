"""Linear algebra over encoded-element matrices, plus kernel backend parity."""

import numpy as np
import pytest

from hbch import _kernels, gf, linalg


@pytest.fixture(scope="module")
def f4():
    return gf.build_field(2, 2)


@pytest.fixture(scope="module")
def f9():
    return gf.build_field(3, 2)


def _random_matrix(field, rows, cols, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, field.order, size=(rows, cols), dtype=np.int64)


@pytest.mark.parametrize("seed", range(5))
def test_rank_invariant_under_shuffles_and_scalings(f9, seed):
    rng = np.random.default_rng(100 + seed)
    mat = _random_matrix(f9, 6, 10, seed)
    base = linalg.rank(f9, mat)
    shuffled = mat[rng.permutation(6)]
    assert linalg.rank(f9, shuffled) == base
    scaled = mat.copy()
    for i in range(6):
        c = int(rng.integers(1, f9.order))
        scaled[i] = f9.mul(scaled[i], c)
    assert linalg.rank(f9, scaled) == base
    assert linalg.row_space_equal(f9, mat, shuffled)
    assert linalg.row_space_equal(f9, mat, scaled)


def test_rref_is_canonical(f4):
    mat = _random_matrix(f4, 5, 8, 3)
    red, rank = linalg.rref(f4, mat)
    pivots = linalg.pivot_columns(red, rank)
    for i, c in enumerate(pivots):
        assert red[i, c] == 1
        col = red[:, c].copy()
        col[i] = 0
        assert not col.any()
    assert not red[rank:].any()


@pytest.mark.parametrize("field_args,shape,seed", [
    ((2, 2), (6, 12), 0), ((3, 2), (8, 8), 1), ((2, 6), (5, 15), 2), ((5, 2), (7, 9), 3),
])
def test_rref_backends_agree(field_args, shape, seed):
    field = gf.build_field(*field_args)
    mat = _random_matrix(field, *shape, seed)
    a = mat.copy()
    rank_np = _kernels._rref_numpy(a, field.order, field.zech, field.half)
    b = mat.astype(np.int64).copy()
    rank_loop = _kernels._rref_loop(b, field.order, field.zech, field.half)
    assert rank_np == rank_loop
    assert np.array_equal(a, b)


@pytest.mark.parametrize("field_args,seed", [((2, 2), 0), ((3, 2), 1), ((2, 6), 2)])
def test_hgram_backends_agree(field_args, seed):
    field = gf.build_field(*field_args)
    a = _random_matrix(field, 4, 20, seed)
    b = _random_matrix(field, 3, 20, seed + 50)
    for conj in (1, 2, 3):
        lhs = _kernels._hgram_numpy(a, b, conj, field.order, field.zech, field.half)
        rhs = _kernels._hgram_loop(a, b, conj, field.order, field.zech, field.half)
        assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("field_args,dim,n,seed", [
    ((2, 2), 5, 9, 0), ((3, 2), 4, 7, 1), ((2, 3), 4, 10, 2),
])
def test_min_weight_backends_agree(field_args, dim, n, seed):
    field = gf.build_field(*field_args)
    gen = linalg.row_basis(field, _random_matrix(field, dim, n, seed))
    encs = np.arange(field.order, dtype=np.int64)
    scaled = _kernels.vmul(encs[None, :, None], gen[:, None, :], field.order)
    a = _kernels._min_weight_numpy(scaled, field.order, field.zech, field.half)
    rolled = np.roll(scaled, -1, axis=1)
    step = _kernels.vadd(rolled, _kernels.vneg(scaled, field.order, field.half),
                         field.order, field.zech)
    b = _kernels._min_weight_loop(step, field.order, field.zech, field.half)
    assert a == b


@pytest.mark.parametrize("p,m", [(2, 8), (3, 4), (5, 3)])
def test_exp_table_backends_agree(p, m):
    mod = np.asarray(gf.conway_polynomial(p, m), dtype=np.int64)
    order = p ** m
    a = _kernels._exp_table_numpy(p, m, mod, order)
    b = _kernels._exp_table_loop(p, m, mod.copy(), order)
    assert np.array_equal(a, b)


def test_null_space_annihilates(f9):
    mat = _random_matrix(f9, 5, 9, 11)
    ns = linalg.null_space(f9, mat)
    assert ns.shape[0] == 9 - linalg.rank(f9, mat)
    prods = linalg.hermitian_products(f9, mat, ns, 1)
    assert not prods.any()


def test_matmul_matches_scalar_computation(f4):
    a = _random_matrix(f4, 3, 4, 5)
    b = _random_matrix(f4, 4, 6, 6)
    out = linalg.matmul(f4, a, b)
    for i in range(3):
        for j in range(6):
            acc = 0
            for t in range(4):
                acc = f4.add(acc, f4.mul(int(a[i, t]), int(b[t, j])))
            assert out[i, j] == acc


def test_min_weight_known_small_code(f4):
    # repetition code of length 6 over GF(4): minimum weight 6
    gen = np.ones((1, 6), dtype=np.int64)
    assert linalg.min_weight_exhaustive(f4, gen) == 6
