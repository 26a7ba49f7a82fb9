"""Hermitian self-orthogonality certificates and sharp representative bounds.

A code over GF(q^2) is Hermitian self-orthogonal iff its Gram matrix under
x . y = sum x_i y_i^q vanishes.  For narrow-sense BCH-type defining sets the
largest admissible coset representative is governed by the integer equation

    q*x + q^(2k)*y = beta*n1,   1 <= x, y <= n1-1,  0 <= k <= s-1,  beta > 0:

the bound L is (min over solutions of max(x, y)) - 1, and it is sharp.  Four
length factorizations admit closed forms; `sharp_bound` cross-dispatches
between those and the brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import linalg
from .errors import (
    AmbiguousCase,
    BudgetExceeded,
    ExcludedCase,
    NonSquareAlphabet,
    NoSolution,
    NotADivisor,
)
from .evalcodes import LinearCode, PointSet

BRUTE_FORCE_LIMIT = 10 ** 5


# ---------------------------------------------------------------------------
# direct Gram certificate

def is_hermitian_self_orthogonal(code: LinearCode):
    """Gram test G . conj(G)^T == 0.

    Returns (flag, certificate): certificate is "zero gram" on success, or
    the first violating row pair (i, j) on failure.
    """
    q = isqrt(code.field.order)
    if q * q != code.field.order:
        raise NonSquareAlphabet(f"alphabet order {code.field.order} is not a square")
    if code.dim == 0:
        return True, "zero gram"
    gram = linalg.hermitian_products(code.field, code.gen, code.gen, q)
    viol = np.argwhere(gram != 0)
    if viol.size == 0:
        return True, "zero gram"
    i, j = (int(v) for v in viol[0])
    return False, (i, j)


def monomial_pair_orthogonal(points: PointSet, e: int, e2: int) -> bool:
    """Whether ev(x**e) and ev(x**e2) are Hermitian-orthogonal on the points.

    Uses the factorized criterion: the product of the root-of-unity sum
    (zero iff e + q*e2 is nonzero mod n1) and the geometric factor
    1 + g^w + ... + g^((lambda-1)w), w = e + q*e2.
    """
    tower = points.tower
    big = tower.big
    w = e + tower.q * e2
    if w % points.n1:
        return True
    gw = big.pow(tower.gamma, w)
    acc = 0
    term = 1
    for _ in range(points.lam):
        acc = big.add(acc, term)
        term = big.mul(term, gw)
    return acc == 0


# ---------------------------------------------------------------------------
# the sharp bound

@dataclass(frozen=True)
class CaseDescriptor:
    """One matching length factorization for the closed-form bound."""

    case_id: str      # "1" | "2" | "3" | "3a0" | "4"
    q: int
    s: int
    n1: int
    n2: int | None = None   # cases 1 and 2
    a: int | None = None    # cases 3 and 4 (a == 0 for "3a0")
    excluded: bool = False  # case 4 with q == 2, a == s-2


@dataclass(frozen=True)
class BoundResult:
    """Largest representative compatible with Hermitian self-orthogonality."""

    L: int
    source: str                       # "closed_form" | "brute_force"
    case: CaseDescriptor | None = None
    witness: tuple[int, int, int, int] | None = None  # (x, y, k, beta), max(x,y) == L+1
    unvalidated: bool = False         # brute force on an excluded case


def classify_case(q: int, s: int, n1: int) -> list[CaseDescriptor]:
    """All length factorizations that n1 matches (possibly none or several)."""
    big_order = q ** (2 * s)
    if n1 < 1 or (big_order - 1) % n1:
        raise NotADivisor(f"{n1} does not divide {big_order - 1}")
    out = []
    qs = q ** s
    # cases 1 and 2: n1 = (q^s + 1) * n2 with n2 | q^s - 1
    if n1 % (qs + 1) == 0:
        n2 = n1 // (qs + 1)
        if n2 >= 1 and (qs - 1) % n2 == 0:
            out.append(CaseDescriptor(case_id="1" if s % 2 == 0 else "2",
                                      q=q, s=s, n1=n1, n2=n2))
    # cases 3, 3a0 and 4: n1 = (q^s - 1) * (q^a + 1), a < s
    if n1 % (qs - 1) == 0:
        rest = n1 // (qs - 1)
        for a in range(0, s):
            if q ** a + 1 != rest:
                continue
            if (s + a) % 2:
                continue
            half_odd = ((s + a) // 2) % 2 == 1
            if half_odd:
                out.append(CaseDescriptor(case_id="3a0" if a == 0 else "3",
                                          q=q, s=s, n1=n1, a=a))
            else:
                out.append(CaseDescriptor(case_id="4", q=q, s=s, n1=n1, a=a,
                                          excluded=(q == 2 and a == s - 2)))
    return out


def sharp_bound_closed_form(desc: CaseDescriptor) -> BoundResult:
    """Closed-form L for a matched case."""
    if desc.excluded:
        raise ExcludedCase(
            f"no closed form for q=2, a=s-2 (q={desc.q}, s={desc.s}, a={desc.a})")
    q, s = desc.q, desc.s
    if desc.case_id == "1":
        n2 = desc.n2
        L = q * n2 - min(((q - 1) * n2) // (q ** (s - 1) + 1),
                         ((q - 1) * n2 - 1) // q ** (s - 1)) - 1
    elif desc.case_id == "2":
        L = desc.n2 - 1
    elif desc.case_id == "3":
        a = desc.a
        L = q ** ((s + a) // 2) + q ** ((s - a) // 2) - 2
    elif desc.case_id == "3a0":
        L = 2 * q ** (s // 2) - 3
    elif desc.case_id == "4":
        a = desc.a
        L = q * (q ** ((s + a) // 2) - q ** a - 1) - 1
    else:  # pragma: no cover
        raise ValueError(f"unknown case {desc.case_id}")
    return BoundResult(L=L, source="closed_form", case=desc)


def sharp_bound_bruteforce(q: int, s: int, n1: int,
                           limit: int = BRUTE_FORCE_LIMIT) -> BoundResult:
    """L by enumerating the defining equation, with a minimal witness.

    For each k, x is determined from y by inverting q modulo n1, so the
    enumeration is O(s * n1).
    """
    big_order = q ** (2 * s)
    if n1 < 1 or (big_order - 1) % n1:
        raise NotADivisor(f"{n1} does not divide {big_order - 1}")
    if n1 > limit:
        raise BudgetExceeded(f"n1={n1} exceeds the enumeration budget {limit}")
    qinv = pow(q, -1, n1) if n1 > 1 else 0
    best = None
    witness = None
    for k in range(s):
        mk = pow(q * q, k, n1)
        coef = (-mk * qinv) % n1
        for y in range(1, n1):
            x = (coef * y) % n1
            if x == 0:
                continue
            m = max(x, y)
            if best is None or m < best:
                best = m
                beta = (q * x + q ** (2 * k) * y) // n1
                witness = (x, y, k, beta)
    if best is None:
        raise NoSolution(f"no solution for q={q}, s={s}, n1={n1} (internal bug)")
    return BoundResult(L=best - 1, source="brute_force", witness=witness)


def sharp_bound(q: int, s: int, n1: int, limit: int = BRUTE_FORCE_LIMIT) -> BoundResult:
    """Closed form when a case matches, brute force otherwise.

    With several matching cases their closed forms must agree; disagreement
    is arbitrated by brute force and reported as AmbiguousCase when that is
    out of budget.  Excluded-case lengths fall back to brute force with the
    `unvalidated` flag set.
    """
    descs = classify_case(q, s, n1)
    usable = [d for d in descs if not d.excluded]
    results = [sharp_bound_closed_form(d) for d in usable]
    values = {r.L for r in results}
    if len(values) == 1:
        return results[0]
    if len(values) > 1:
        if n1 > limit:
            raise AmbiguousCase(
                f"matching cases disagree for (q={q}, s={s}, n1={n1}) "
                "and brute force is out of budget")
        brute = sharp_bound_bruteforce(q, s, n1, limit)
        if brute.L not in values:
            raise AmbiguousCase(
                f"closed forms {sorted(values)} all disagree with brute force {brute.L}")
        return brute
    brute = sharp_bound_bruteforce(q, s, n1, limit)
    if any(d.excluded for d in descs):
        return BoundResult(L=brute.L, source="brute_force", case=descs[0],
                           witness=brute.witness, unvalidated=True)
    return brute


def aly_bound(q: int, s: int, n1: int) -> int:
    """Prior-work designed-distance bound used for comparison tables."""
    big_order = q ** (2 * s)
    if n1 < 1 or (big_order - 1) % n1:
        raise NotADivisor(f"{n1} does not divide {big_order - 1}")
    if s % 2 == 0:
        return n1 * (q ** (s + 1) - q * q + 1) // (big_order - 1) - 1
    return n1 // (q ** s + 1) - 1


def bound_report_row(q: int, s: int, n1: int,
                     limit: int = BRUTE_FORCE_LIMIT) -> dict:
    """One comparison record: closed form, brute force and the Aly bound."""
    descs = classify_case(q, s, n1)
    usable = [d for d in descs if not d.excluded]
    closed = sharp_bound_closed_form(usable[0]).L if usable else None
    brute = None
    witness = None
    if n1 <= limit:
        b = sharp_bound_bruteforce(q, s, n1, limit)
        brute, witness = b.L, b.witness
    return {
        "q": q,
        "s": s,
        "n1": n1,
        "cases": [d.case_id + ("(excluded)" if d.excluded else "") for d in descs],
        "L_closed": closed,
        "L_brute": brute,
        "aly_bound": aly_bound(q, s, n1),
        "witness": witness,
    }


def format_bound_row(row: dict) -> str:
    """Serialize a report row: q s n1 case L_closed L_brute aly_bound wx wy wk."""
    case = ",".join(row["cases"]) if row["cases"] else "-"
    closed = row["L_closed"] if row["L_closed"] is not None else "-"
    brute = row["L_brute"] if row["L_brute"] is not None else "-"
    wx = wy = wk = "-"
    if row["witness"]:
        wx, wy, wk, _ = row["witness"]
    return (f"{row['q']} {row['s']} {row['n1']} {case} {closed} {brute} "
            f"{row['aly_bound']} {wx} {wy} {wk}")
