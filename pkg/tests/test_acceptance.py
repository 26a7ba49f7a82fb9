"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line with its elapsed time (visible
with `pytest -s`).  All checks are exact integer comparisons.  Runtime
targets are asserted on the default (numba) backend only; the numpy
fallback trades speed for zero compilation time.
"""

import time
from contextlib import contextmanager

import pytest

from hbch import cosets as cs
from hbch import evalcodes as ec
from hbch import gf
from hbch import hermitian as hm
from hbch import quantum as qt
from hbch._kernels import BACKEND

SWEEP_QS = (2, 3, 4, 5, 7, 8)
SWEEP_SS = (2, 3, 4, 5)


@contextmanager
def criterion(num, description, target_seconds=None):
    t0 = time.perf_counter()
    try:
        yield
    except Exception:
        print(f"FAIL  criterion {num}: {description} "
              f"[{time.perf_counter() - t0:.1f}s]")
        raise
    elapsed = time.perf_counter() - t0
    print(f"PASS  criterion {num}: {description} [{elapsed:.1f}s]")
    if target_seconds is not None and BACKEND == "numba":
        assert elapsed < target_seconds, f"exceeded the {target_seconds}s target"


def _bch_code(tower, n1, reps=None, tau=None, include_zero=False):
    system = cs.build_cosets(n1, tower.q)
    if reps is not None:
        delta = cs.defining_set_from_reps(system, reps, include_zero)
    else:
        delta = cs.defining_set(system, tau, include_zero)
    pts = ec.build_points(tower, n1, 1)
    return ec.subfield_subcode(ec.evaluation_code(pts, delta), tower)


def test_criterion_1_binary_186_code():
    with criterion(1, "[[186,126,>=9]]_2 reproduction", target_seconds=30):
        result = qt.homothetic_pipeline(2, 5, 93, 2, coset_reps=(1, 2, 3, 5, 6, 7))
        assert result.params.param_string() == "[[186,126,>=9]]_2"
        assert result.code.length == 186
        assert result.code.dim == 30
        ok, cert = hm.is_hermitian_self_orthogonal(result.code)
        assert ok and cert == "zero gram"
        system = cs.build_cosets(2 ** 10 - 1, 2)
        delta = cs.defining_set_from_reps(system, (1, 2, 3, 5, 6, 7))
        assert cs.next_representative(delta) == 9


def test_criterion_2_five_ary_96_codes():
    with criterion(2, "[[96,68,>=8]]_5 reproduction", target_seconds=10):
        r = qt.homothetic_pipeline(5, 2, 48, 2, tau=7)
        assert r.params.param_string() == "[[96,68,>=8]]_5"
        assert r.code.dim == 14
        assert hm.is_hermitian_self_orthogonal(r.code)[0]
        assert r.params.d_designed == 8
    with criterion(2, "[[96,72,>=7]]_5 reproduction", target_seconds=10):
        r = qt.homothetic_pipeline(5, 2, 48, 2, tau=6)
        assert r.params.param_string() == "[[96,72,>=7]]_5"
        assert r.code.dim == 12
        assert hm.is_hermitian_self_orthogonal(r.code)[0]
        assert r.params.d_designed == 7


def test_criterion_3_eight_ary_91_code():
    with criterion(3, "[[91,55,>=11]]_8 reproduction", target_seconds=10):
        result = qt.bch_pipeline(8, 2, 91, tau=9)
        assert result.params.param_string() == "[[91,55,>=11]]_8"
        assert result.code.dim == 18
        ok, cert = hm.is_hermitian_self_orthogonal(result.code)
        assert ok and cert == "zero gram"
        system = cs.build_cosets(91, 8)
        assert cs.next_representative(cs.defining_set(system, 9)) == 11


def test_criterion_4_bound_equivalence_sweep():
    with criterion(4, "closed-form vs brute-force bound sweep", target_seconds=300):
        checked = 0
        for q in SWEEP_QS:
            for s in SWEEP_SS:
                if q ** (2 * s) > 2 ** 24:
                    continue
                for n1 in qt.case_form_lengths(q, s, 5000):
                    descs = [d for d in hm.classify_case(q, s, n1) if not d.excluded]
                    if not descs:
                        continue
                    brute = hm.sharp_bound_bruteforce(q, s, n1).L
                    for desc in descs:
                        closed = hm.sharp_bound_closed_form(desc).L
                        assert closed == brute, (q, s, n1, desc.case_id, closed, brute)
                        checked += 1
        assert checked >= 50
        print(f"      ({checked} case instances checked)", end=" ")


SHARPNESS_CONFIGS = [
    (2, 2, 15), (2, 3, 63), (2, 4, 17), (2, 5, 93), (3, 2, 16), (3, 2, 40),
    (3, 3, 364), (4, 2, 85), (5, 2, 26), (5, 2, 48), (7, 2, 50), (8, 2, 65),
    (8, 2, 91),
]


def test_criterion_5_sharpness_suite():
    with criterion(5, f"sharpness at the bound, {len(SHARPNESS_CONFIGS)} parameter sets"):
        assert len(SHARPNESS_CONFIGS) >= 10
        for q, s, n1 in SHARPNESS_CONFIGS:
            L = hm.sharp_bound(q, s, n1).L
            tower = gf.build_tower(q, s)
            system = cs.build_cosets(n1, q)
            passing = [r for r in system.reps[1:] if r <= L]
            assert passing, (q, s, n1, L)
            # the first representative beyond the passing prefix is L + 1
            assert system.reps[len(passing) + 1] == L + 1, (q, s, n1)
            good = _bch_code(tower, n1, tau=len(passing))
            assert hm.is_hermitian_self_orthogonal(good)[0], (q, s, n1, "pass side")
            bad = _bch_code(tower, n1, tau=len(passing) + 1)
            assert not hm.is_hermitian_self_orthogonal(bad)[0], (q, s, n1, "fail side")


IMPLICATION_TUPLES = (
    [(2, 3, 7, lam, tau, False) for lam in (2, 4, 5, 6, 8) for tau in (1, 2)]
    + [(2, 2, 5, 2, 1, False)]
    + [(3, 2, 5, lam, 1, False) for lam in (3, 6, 7)]
    + [(3, 2, 10, lam, tau, False) for lam in (3, 6, 7) for tau in (1, 2)]
    + [(2, 3, 21, 2, tau, False) for tau in (1, 2, 3)]
    + [(2, 3, 21, 2, tau, True) for tau in (2, 3)]
)


def test_criterion_6_implication_suite():
    with criterion(6, f"self-orthogonality transfer, {len(IMPLICATION_TUPLES)} tuples"):
        assert len(IMPLICATION_TUPLES) >= 20
        for q, s, n1, lam, tau, zero in IMPLICATION_TUPLES:
            tower = gf.build_tower(q, s)
            big_n = tower.big.order - 1
            system = cs.build_cosets(big_n, q)
            delta = cs.defining_set(system, tau)
            reduced = cs.reduce_mod(delta, n1)
            # premise: the punctured narrow-sense code is self-orthogonal
            premise = _bch_code(tower, n1, reps=reduced.reps)
            assert hm.is_hermitian_self_orthogonal(premise)[0], (q, s, n1, tau)
            result = qt.homothetic_pipeline(q, s, n1, lam, tau=tau, include_zero=zero)
            ok, cert = hm.is_hermitian_self_orthogonal(result.code)
            assert ok and cert == "zero gram", (q, s, n1, lam, tau, zero)


def test_criterion_7_aly_comparison():
    with criterion(7, "prior-bound comparison (case 3 strict, case 2 equal)"):
        case3_odd = 0
        case2 = 0
        saw_limit_case = False
        for q in SWEEP_QS:
            for s in SWEEP_SS:
                if q ** (2 * s) > 2 ** 24 or s % 2 == 0:
                    continue
                for n1 in qt.case_form_lengths(q, s, 6000):
                    for desc in hm.classify_case(q, s, n1):
                        if desc.excluded:
                            continue
                        closed = hm.sharp_bound_closed_form(desc).L
                        aly = hm.aly_bound(q, s, n1)
                        if desc.case_id == "3":
                            assert closed > aly, (q, s, n1)
                            case3_odd += 1
                            if (q, s, desc.a) == (2, 5, 1):
                                saw_limit_case = True
                        elif desc.case_id == "2":
                            assert closed == aly, (q, s, n1)
                            case2 += 1
        assert saw_limit_case, "the tightest case-3 configuration must be covered"
        assert case3_odd >= 2 and case2 >= 5
        print(f"      (case 3 odd: {case3_odd}, case 2: {case2})", end=" ")


def test_criterion_8_tiny_scale_distance_check():
    with criterion(8, "exhaustive dual distances at n1=15 over GF(4)",
                   target_seconds=60):
        q, s, n1 = 2, 2, 15
        tower = gf.build_tower(q, s)
        system = cs.build_cosets(n1, q)
        L = hm.sharp_bound(q, s, n1).L
        assert L == 4
        taus = [t for t in range(1, system.num_nonzero + 1)
                if system.reps[t] <= L]
        assert taus == [1, 2, 3]
        for tau in taus:
            code = _bch_code(tower, n1, tau=tau)
            dual = ec.hermitian_dual(code)
            designed = system.reps[tau + 1]
            d = ec.min_distance_exhaustive(dual)
            assert d >= designed, (tau, d, designed)


def test_criterion_9_out_of_scope_statement():
    with criterion(9, "out-of-scope items stated"):
        print()
        print("      NOTE: true minimum distances of the large Hermitian duals "
              "(e.g. the dimension-73 dual over GF(64) behind [[91,55,>=11]]_8)")
        print("      and record-vs-code-table comparisons depend on external "
              "resources and are not desk-verifiable; the designed-distance")
        print("      and property suites above stand in for them.", end=" ")
        dual = ec.hermitian_dual(_bch_code(gf.build_tower(8, 2), 91, tau=9))
        assert dual.dim == 73
        with pytest.raises(ec.TooLarge):
            ec.min_distance_exhaustive(dual)
