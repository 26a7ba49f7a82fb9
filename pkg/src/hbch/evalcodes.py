"""Evaluation point sets, monomial evaluation codes and subfield-subcodes.

Point sets are either the N-th roots of unity U(N) or the scaled union
P(n1, lambda) = U(n1) + gamma*U(n1) + ... + gamma^(lambda-1)*U(n1), whose
first n1 points are exactly U(n1).  Codes are generator matrices of encoded
elements, reduced to canonical row echelon form on construction so that
row-space equality is matrix equality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from math import isqrt

import numpy as np

from . import linalg
from .cosets import DefiningSet
from .errors import (
    AlphabetMismatch,
    BadRange,
    LambdaTooLarge,
    NonSquareAlphabet,
    NotADivisor,
    TooLarge,
)
from .gf import FieldCtx, FieldTower

WORD_BUDGET = 1 << 30  # max enumerated codewords for exhaustive distance


@dataclass(frozen=True, eq=False)
class PointSet:
    """Ordered evaluation points (nonzero elements of the big field)."""

    tower: FieldTower
    kind: str          # "U" for roots of unity, "P" for the scaled union
    points: np.ndarray = dc_field(repr=False)
    n1: int
    lam: int

    @property
    def size(self) -> int:
        return int(self.points.size)


def build_points(tower: FieldTower, n1: int, lam: int = 1) -> PointSet:
    """P(n1, lambda); with lam == 1 this is U(n1)."""
    qm1 = tower.big.order - 1
    if n1 < 1 or qm1 % n1:
        raise NotADivisor(f"{n1} does not divide {qm1}")
    if not 1 <= lam <= qm1 // n1:
        raise LambdaTooLarge(f"lambda must be in [1, {qm1 // n1}]")
    if lam > 1 and qm1 % (lam * n1) == 0:
        warnings.warn(
            f"lambda*n1 = {lam * n1} divides {qm1}; this length is reachable "
            "by a plain roots-of-unity code", stacklevel=2)
    step = qm1 // n1
    i = np.arange(n1, dtype=np.int64)
    blocks = [(t + i * step) % qm1 + 1 for t in range(lam)]
    pts = np.concatenate(blocks)
    pts.setflags(write=False)
    return PointSet(tower=tower, kind="U" if lam == 1 else "P",
                    points=pts, n1=n1, lam=lam)


class LinearCode:
    """A linear code given by a canonical (RREF) generator matrix."""

    __slots__ = ("field", "gen", "length", "dim", "meta")

    def __init__(self, field: FieldCtx, rows, length: int | None = None, meta=None):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            if length is None:
                raise ValueError("zero code needs an explicit length")
            gen = np.zeros((0, length), dtype=np.int64)
        else:
            gen = linalg.row_basis(field, np.atleast_2d(rows))
        if length is not None and gen.shape[1] != length:
            raise ValueError("row length disagrees with the declared length")
        self.field = field
        self.gen = gen
        self.length = int(gen.shape[1])
        self.dim = int(gen.shape[0])
        self.meta = dict(meta) if meta else {}

    @classmethod
    def zero(cls, field: FieldCtx, length: int, meta=None) -> "LinearCode":
        return cls(field, np.zeros((0, length), dtype=np.int64), length=length, meta=meta)

    def __eq__(self, other):
        return (isinstance(other, LinearCode)
                and self.field.order == other.field.order
                and self.gen.shape == other.gen.shape
                and bool(np.array_equal(self.gen, other.gen)))

    def __repr__(self):
        return f"LinearCode([{self.length}, {self.dim}]_{self.field.order})"

    def to_text(self) -> str:
        """Line format: header "q2 n k", then k rows of element encodings."""
        lines = [f"{self.field.order} {self.length} {self.dim}"]
        for row in self.gen:
            lines.append(" ".join(str(int(e)) for e in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, field: FieldCtx, text: str) -> "LinearCode":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        order, n, k = (int(t) for t in lines[0].split())
        if order != field.order:
            raise AlphabetMismatch(f"serialized alphabet {order} != field order {field.order}")
        rows = np.zeros((k, n), dtype=np.int64)
        for i in range(k):
            rows[i] = [int(t) for t in lines[1 + i].split()]
        return cls(field, rows, length=n)


def evaluation_code(points: PointSet, delta: DefiningSet) -> LinearCode:
    """Code spanned by the monomial evaluations x**e, e in the defining set."""
    big = points.tower.big
    qm1 = big.order - 1
    exps = np.asarray(delta.elements, dtype=np.int64) % qm1
    dlogs = points.points - 1
    rows = (dlogs[None, :] * exps[:, None]) % qm1 + 1
    meta = {
        "construction": "evaluation",
        "delta_reps": delta.reps,
        "includes_zero": delta.includes_zero,
        "exponent_modulus": delta.system.modulus,
        "points": (points.kind, points.n1, points.lam),
    }
    return LinearCode(big, rows, meta=meta)


def _power_basis_with_dual(tower: FieldTower):
    """Basis gamma^j of big over small plus its trace-dual basis."""
    big, small, s = tower.big, tower.small, tower.s
    basis = [big.pow(tower.gamma, j) for j in range(s)]
    gram = np.zeros((s, s), dtype=np.int64)
    for i in range(s):
        for j in range(s):
            gram[i, j] = tower.shrink(tower.trace_to_small(big.mul(basis[i], basis[j])))
    ident = np.zeros((s, s), dtype=np.int64)
    for i in range(s):
        ident[i, i] = 1
    red, rk = linalg.rref(small, np.concatenate([gram, ident], axis=1))
    if rk != s:
        raise AlphabetMismatch("degenerate trace form (incompatible tower)")
    inv = red[:, s:]
    dual = []
    for i in range(s):
        acc = 0
        for j in range(s):
            acc = big.add(acc, big.mul(tower.embed(int(inv[i, j])), basis[j]))
        dual.append(acc)
    return basis, dual


def subfield_subcode(code: LinearCode, tower: FieldTower) -> LinearCode:
    """Codewords with all coordinates in the embedded small field.

    Computed by scalar restriction: expand the message space over a basis of
    the big field and solve for the combinations whose coordinates along the
    non-identity basis directions vanish everywhere.
    """
    big, small, s = tower.big, tower.small, tower.s
    if code.field.order != big.order:
        raise AlphabetMismatch("code alphabet is not the tower's big field")
    k, n = code.dim, code.length
    meta = dict(code.meta)
    meta["construction"] = "subfield_subcode"
    if k == 0:
        return LinearCode.zero(small, n, meta=meta)
    basis, dual = _power_basis_with_dual(tower)
    scaled = np.zeros((k * s, n), dtype=np.int64)
    for i in range(k):
        for j in range(s):
            scaled[i * s + j] = big.mul(code.gen[i], basis[j])
    blocks = []
    for jp in range(1, s):
        traced = tower.trace_to_small(big.mul(dual[jp], scaled))
        blocks.append(tower.shrink(traced).T)
    if blocks:
        constraints = np.concatenate(blocks, axis=0)
        coeffs = linalg.null_space(small, constraints)
    else:
        coeffs = np.eye(k * s, dtype=np.int64)
    if coeffs.shape[0] == 0:
        return LinearCode.zero(small, n, meta=meta)
    words_big = linalg.matmul(big, tower.embed(coeffs), scaled)
    return LinearCode(small, tower.shrink(words_big), meta=meta)


def trace_subcode(points: PointSet, delta: DefiningSet) -> LinearCode:
    """Subfield code spanned by traces of scaled monomials.

    Generator rows are the evaluations of Tr(gamma^j x**e) for e over the
    defining set's representatives and j over the basis range; used as an
    independent cross-check of `subfield_subcode`.
    """
    tower = points.tower
    big, small, s = tower.big, tower.small, tower.s
    exps = list(delta.reps)
    if delta.includes_zero:
        exps = [0] + exps
    rows = []
    for e in exps:
        pe = big.pow(points.points, e)
        for j in range(s):
            row = tower.trace_to_small(big.mul(big.pow(tower.gamma, j), pe))
            rows.append(tower.shrink(row))
    meta = {
        "construction": "trace_subcode",
        "delta_reps": delta.reps,
        "includes_zero": delta.includes_zero,
        "exponent_modulus": delta.system.modulus,
        "points": (points.kind, points.n1, points.lam),
    }
    if not rows:
        return LinearCode.zero(small, points.size, meta=meta)
    return LinearCode(small, np.asarray(rows, dtype=np.int64), meta=meta)


def puncture(code: LinearCode, keep: int) -> LinearCode:
    """Restrict to the first `keep` coordinates and re-reduce."""
    if not 1 <= keep <= code.length:
        raise BadRange(f"keep must be in [1, {code.length}]")
    meta = dict(code.meta)
    meta["construction"] = "puncture"
    if code.dim == 0:
        return LinearCode.zero(code.field, keep, meta=meta)
    return LinearCode(code.field, code.gen[:, :keep], meta=meta)


def hermitian_dual(code: LinearCode) -> LinearCode:
    """Dual w.r.t. x . y = sum x_i y_i^q on a GF(q^2) alphabet."""
    q = isqrt(code.field.order)
    if q * q != code.field.order:
        raise NonSquareAlphabet(f"alphabet order {code.field.order} is not a square")
    meta = dict(code.meta)
    meta["construction"] = "hermitian_dual"
    if code.dim == 0:
        rows = np.eye(code.length, dtype=np.int64)
        return LinearCode(code.field, rows, meta=meta)
    conj = linalg.conj_pow_matrix(code.field, code.gen, q)
    basis = linalg.null_space(code.field, conj)
    if basis.shape[0] == 0:
        return LinearCode.zero(code.field, code.length, meta=meta)
    return LinearCode(code.field, basis, meta=meta)


def distance_cap(field: FieldCtx, budget: int = WORD_BUDGET) -> int:
    """Largest dimension whose full codeword enumeration fits the budget."""
    cap = 0
    words = field.order
    while words <= budget:
        cap += 1
        words *= field.order
    return cap


def min_distance_exhaustive(code: LinearCode, cap: int | None = None) -> int:
    """Exact minimum distance by enumerating every nonzero codeword."""
    if code.dim == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if cap is None:
        cap = distance_cap(code.field)
    if code.dim > cap:
        raise TooLarge(f"dimension {code.dim} exceeds the enumeration cap {cap}")
    return linalg.min_weight_exhaustive(code.field, code.gen)
