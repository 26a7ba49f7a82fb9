"""Stabilizer code parameters from Hermitian self-orthogonal classical codes.

The two construction routes both end in a verified Gram certificate:

* `bch_pipeline` builds the subfield-subcode of a monomial code on the
  n1-th roots of unity (a narrow-sense BCH code) inside GF(q^(2s)).
* `homothetic_pipeline` evaluates on lambda scaled copies of those roots,
  reaching lengths lambda*n1 that no roots-of-unity code can have.

A self-orthogonal [n, k] code over GF(q^2) yields an [[n, n-2k, >= d]]_q
stabilizer code, with the designed distance read off the first absent
coset representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from math import gcd

from . import cosets as cs
from . import evalcodes as ec
from . import hermitian as hm
from .errors import (
    BoundExceeded,
    BudgetExceeded,
    NotADivisor,
    NotSelfOrthogonal,
    PreconditionViolated,
)
from .gf import build_tower


@dataclass(frozen=True)
class QuantumParams:
    """Parameters [[n, k, >= d]]_q plus construction provenance."""

    q: int
    n: int
    k: int
    d_designed: int
    pure_chain: int = 0      # lengthening steps applied
    provenance: dict = dc_field(default_factory=dict)

    def param_string(self) -> str:
        return f"[[{self.n},{self.k},>={self.d_designed}]]_{self.q}"

    def record_line(self) -> str:
        p = self.provenance
        reps = ",".join(str(r) for r in p.get("cosets", []))
        return (f"{self.q} {self.n} {self.k} {self.d_designed}"
                f" construction={p.get('construction', '?')}"
                f" q={p.get('q', self.q)} s={p.get('s', '?')} n1={p.get('n1', '?')}"
                f" lambda={p.get('lambda', '?')} cosets=[{reps}]"
                f" zero={p.get('include_zero', False)} lengthened={self.pure_chain}")

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d_designed": self.d_designed,
            "pure_chain": self.pure_chain,
            "provenance": dict(self.provenance),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuantumParams":
        return cls(q=d["q"], n=d["n"], k=d["k"], d_designed=d["d_designed"],
                   pure_chain=d.get("pure_chain", 0),
                   provenance=dict(d.get("provenance", {})))


@dataclass(frozen=True)
class PipelineResult:
    params: QuantumParams
    code: ec.LinearCode
    report: dict


def stabilizer_from_classical(code: ec.LinearCode, d_bound: int,
                              provenance: dict | None = None) -> QuantumParams:
    """[[n, n-2k, >= d_bound]]_q from a verified self-orthogonal [n, k] code."""
    ok, cert = hm.is_hermitian_self_orthogonal(code)
    if not ok:
        raise NotSelfOrthogonal(f"Gram matrix is nonzero at row pair {cert}")
    from math import isqrt

    q = isqrt(code.field.order)
    return QuantumParams(q=q, n=code.length, k=code.length - 2 * code.dim,
                         d_designed=d_bound,
                         provenance=dict(provenance or {}))


def _select_delta(system: cs.CosetSystem, tau, coset_reps, include_zero):
    if (tau is None) == (coset_reps is None):
        raise PreconditionViolated("give exactly one of tau or an explicit coset list")
    if tau is not None:
        return cs.defining_set(system, tau, include_zero)
    return cs.defining_set_from_reps(system, coset_reps, include_zero)


def bch_pipeline(q: int, s: int, n1: int, tau: int | None = None,
                 coset_reps=None, include_zero: bool = False) -> PipelineResult:
    """Narrow-sense BCH stabilizer construction on U(n1) inside GF(q^(2s))."""
    tower = build_tower(q, s)
    big_n = tower.big.order - 1
    if n1 < 1 or big_n % n1:
        raise NotADivisor(f"{n1} does not divide {big_n}")
    system = cs.build_cosets(n1, q)
    delta = _select_delta(system, tau, coset_reps, include_zero)
    points = ec.build_points(tower, n1, 1)
    classical = ec.subfield_subcode(ec.evaluation_code(points, delta), tower)
    d = cs.next_representative(delta) + (1 if include_zero else 0)
    provenance = {
        "construction": "bch",
        "q": q, "s": s, "n1": n1, "lambda": 1,
        "cosets": list(delta.reps),
        "include_zero": include_zero,
        "classical_dim": classical.dim,
    }
    params = stabilizer_from_classical(classical, d, provenance)
    report = {
        "length": classical.length,
        "rank": classical.dim,
        "coset_size_sum": delta.size,
        "k_lower_bound": classical.length - 2 * delta.size,
        "a_max": delta.max_representative,
        "gram": "zero",
    }
    return PipelineResult(params=params, code=classical, report=report)


def homothetic_pipeline(q: int, s: int, n1: int, lam: int,
                        tau: int | None = None, coset_reps=None,
                        include_zero: bool = False,
                        bound_limit: int = hm.BRUTE_FORCE_LIMIT) -> PipelineResult:
    """Full scaled-copies construction with the sharp-bound precondition.

    Builds the defining set over q^(2s)-1, reduces it modulo n1, checks the
    largest reduced representative against the sharp bound, evaluates on
    P(n1, lambda), takes the subfield-subcode and re-verifies the Gram
    certificate before emitting parameters.
    """
    if s < 2:
        raise PreconditionViolated("the scaled construction needs s >= 2")
    tower = build_tower(q, s)
    big_n = tower.big.order - 1
    if n1 < 1 or big_n % n1:
        raise NotADivisor(f"{n1} does not divide {big_n}")
    if not 1 <= lam <= big_n // n1:
        raise PreconditionViolated(f"lambda must be in [1, {big_n // n1}]")
    if big_n % (lam * n1) == 0:
        raise PreconditionViolated(
            f"lambda*n1 = {lam * n1} divides {big_n}; use the plain BCH route")
    if include_zero and lam % tower.p:
        raise PreconditionViolated(
            f"including the zero coset needs p={tower.p} to divide lambda={lam}")
    system = cs.build_cosets(big_n, q)
    delta = _select_delta(system, tau, coset_reps, include_zero)
    reduced = cs.reduce_mod(delta, n1)
    if reduced.includes_zero and not include_zero:
        raise PreconditionViolated(
            "the defining set reduces onto the zero coset modulo n1")
    a_max = reduced.max_representative
    bound = hm.sharp_bound(q, s, n1, bound_limit)
    if a_max > bound.L:
        raise BoundExceeded(
            f"largest reduced representative {a_max} exceeds the sharp bound {bound.L}")
    points = ec.build_points(tower, n1, lam)
    classical = ec.subfield_subcode(ec.evaluation_code(points, delta), tower)
    d = cs.next_representative(delta) + (1 if include_zero else 0)
    provenance = {
        "construction": "homothetic",
        "q": q, "s": s, "n1": n1, "lambda": lam,
        "cosets": list(delta.reps),
        "include_zero": include_zero,
        "classical_dim": classical.dim,
    }
    params = stabilizer_from_classical(classical, d, provenance)
    report = {
        "length": classical.length,
        "rank": classical.dim,
        "coset_size_sum": delta.size,
        "k_lower_bound": classical.length - 2 * delta.size,
        "a_max": a_max,
        "reduced_reps": list(reduced.reps),
        "L": bound.L,
        "bound_source": bound.source,
        "bound_unvalidated": bound.unvalidated,
        "gram": "zero",
    }
    return PipelineResult(params=params, code=classical, report=report)


def lengthen(params: QuantumParams, steps: int) -> QuantumParams:
    """Apply the parameter-level rule [[n, k, d]] -> [[n+1, k, >= d]] `steps` times."""
    if steps < 1:
        raise PreconditionViolated("steps must be >= 1")
    return replace(params, n=params.n + steps, pure_chain=params.pure_chain + steps)


# ---------------------------------------------------------------------------
# grid scan

@dataclass(frozen=True)
class ScanConfig:
    q: int
    s: int
    n1: int
    lam: int
    tau: int | None = None
    cosets: tuple[int, ...] | None = None
    include_zero: bool = False


@dataclass(frozen=True)
class ScanGrid:
    """Either an explicit config list (pinned) or ranges to enumerate."""

    configs: tuple[ScanConfig, ...] = ()
    pairs: tuple[tuple[int, int], ...] = ()
    n1_values: tuple[int, ...] = ()
    n1_max: int = 0
    lambdas: tuple[int, ...] = ()
    tau_max: int = 0
    try_zero: bool = False
    budget: int = 1000
    jobs: int = 1


def case_form_lengths(q: int, s: int, n1_max: int) -> list[int]:
    """Divisor lengths matching any of the closed-form factorizations."""
    big_n = q ** (2 * s) - 1
    out = set()
    qs = q ** s
    n2 = 1
    while (qs + 1) * n2 <= n1_max:
        if (qs - 1) % n2 == 0:
            out.add((qs + 1) * n2)
        n2 += 1
    for a in range(0, s):
        n1 = (qs - 1) * (q ** a + 1)
        if n1 <= n1_max and big_n % n1 == 0 and (s + a) % 2 == 0:
            out.add(n1)
    return sorted(out)


def _enumerate_configs(grid: ScanGrid):
    if grid.configs:
        yield from grid.configs
        return
    for q, s in grid.pairs:
        big_n = q ** (2 * s) - 1
        n1s = grid.n1_values or case_form_lengths(q, s, grid.n1_max)
        for n1 in n1s:
            if big_n % n1:
                continue
            for lam in grid.lambdas:
                zeros = (False, True) if grid.try_zero else (False,)
                for z in zeros:
                    for tau in range(1, grid.tau_max + 1):
                        yield ScanConfig(q=q, s=s, n1=n1, lam=lam, tau=tau,
                                         include_zero=z)


def _admissible(cfg: ScanConfig) -> bool:
    """Cheap precheck (no field construction) of every pipeline precondition."""
    q, s, n1, lam = cfg.q, cfg.s, cfg.n1, cfg.lam
    big_n = q ** (2 * s) - 1
    if n1 < 1 or big_n % n1 or gcd(n1, q) != 1:
        return False
    if not 1 <= lam <= big_n // n1:
        return False
    if lam == 1:
        system = cs.build_cosets(n1, q)
        if cfg.include_zero:
            return False  # ev(1).ev(1) = n1 != 0 in GF(p): never self-orthogonal
    else:
        if big_n % (lam * n1) == 0:
            return False
        p = _char(q)
        if cfg.include_zero and lam % p:
            return False
        system = cs.build_cosets(big_n, q)
    if cfg.tau is not None and not 1 <= cfg.tau <= system.num_nonzero:
        return False
    try:
        delta = _select_delta(system, cfg.tau, cfg.cosets, cfg.include_zero)
        if lam == 1:
            a_max = delta.max_representative
        else:
            reduced = cs.reduce_mod(delta, n1)
            if reduced.includes_zero and not cfg.include_zero:
                return False
            a_max = reduced.max_representative
        bound = hm.sharp_bound(q, s, n1)
    except (hm.BudgetExceeded, PreconditionViolated, NotADivisor):
        return False
    except Exception:
        raise
    return a_max <= bound.L


def _char(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p


def _run_config(cfg: ScanConfig) -> QuantumParams:
    if cfg.lam == 1:
        result = bch_pipeline(cfg.q, cfg.s, cfg.n1, tau=cfg.tau,
                              coset_reps=cfg.cosets, include_zero=cfg.include_zero)
    else:
        result = homothetic_pipeline(cfg.q, cfg.s, cfg.n1, cfg.lam, tau=cfg.tau,
                                     coset_reps=cfg.cosets,
                                     include_zero=cfg.include_zero)
    return result.params


def scan(grid: ScanGrid) -> list[QuantumParams]:
    """Run every admissible grid config, deduplicate and sort the parameters.

    A budget of zero runs nothing; more admissible configs than the budget
    raises BudgetExceeded before any pipeline work starts.
    """
    if grid.budget == 0:
        return []
    survivors = [cfg for cfg in _enumerate_configs(grid) if _admissible(cfg)]
    if len(survivors) > grid.budget:
        raise BudgetExceeded(
            f"{len(survivors)} pipeline invocations exceed the budget {grid.budget}")
    if grid.jobs > 1 and len(survivors) > 1:
        import multiprocessing

        with multiprocessing.Pool(grid.jobs) as pool:
            results = pool.map(_run_config, survivors)
    else:
        results = [_run_config(cfg) for cfg in survivors]
    seen = {}
    for params in results:
        key = (params.q, params.n, params.k, params.d_designed)
        if key not in seen:
            seen[key] = params
    return sorted(seen.values(), key=lambda r: (r.q, r.n, -r.k, -r.d_designed))
