#!/usr/bin/env python3
"""Regenerate src/hbch/data/conway_polynomials.txt.

A Conway polynomial C(p, m) is the smallest monic primitive polynomial of
degree m over GF(p) that is norm-compatible with C(p, d) for every proper
divisor d of m, where "smallest" refers to the standard ordering: writing
f = x^m - c_{m-1} x^{m-1} + c_{m-2} x^{m-2} - ..., candidates are compared
by the word (c_{m-1}, ..., c_0) lexicographically.

Needs sympy (for factoring p^m - 1) and the hbch package on sys.path.
"""

from __future__ import annotations

import sys
from pathlib import Path

import sympy

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hbch.gf import is_irreducible, poly_mulmod, poly_powmod, poly_trim  # noqa: E402

TARGETS = [(p, m) for p in (2, 3, 5, 7) for m in range(1, 13)] + [(2, 20)]
OUT = Path(__file__).resolve().parents[1] / "src" / "hbch" / "data" / "conway_polynomials.txt"


def candidates(p, m):
    for w in range(p ** m):
        cs = [(w // p ** j) % p for j in range(m)]
        f = tuple(((-1) ** (m - j) * cs[j]) % p for j in range(m)) + (1,)
        yield f


def is_primitive(f, p, m, factors):
    order = p ** m - 1
    x = (0, 1)
    if poly_powmod(x, order, f, p) != (1,):
        return False
    for r in factors:
        if poly_powmod(x, order // r, f, p) == (1,):
            return False
    return True


def eval_poly_at(coeffs, y, f, p):
    """coeffs(y) mod f via Horner, y itself a polynomial mod f."""
    acc = ()
    for c in reversed(coeffs):
        acc = poly_mulmod(acc, y, f, p)
        if c:
            n = max(len(acc), 1)
            lst = list(acc) + [0] * (n - len(acc))
            lst[0] = (lst[0] + c) % p
            acc = poly_trim(lst)
    return acc


def is_compatible(f, p, m, table):
    order = p ** m - 1
    for d in range(1, m):
        if m % d:
            continue
        t = order // (p ** d - 1)
        y = poly_powmod((0, 1), t, f, p)
        if eval_poly_at(table[(p, d)], y, f, p) != ():
            return False
    return True


def conway(p, m, table):
    factors = sorted(sympy.factorint(p ** m - 1))
    req_const = None
    if m > 1:
        # norm compatibility with degree 1 pins the constant term:
        # f(0) = (-1)^m * root(C(p, 1))
        root1 = (-table[(p, 1)][0]) % p
        req_const = ((-1) ** m * root1) % p
    for f in candidates(p, m):
        if m > 1:
            if f[0] != req_const:
                continue
            if any(_eval_mod_p(f, v, p) == 0 for v in range(p)):
                continue
        if not is_irreducible(f, p):
            continue
        if not is_primitive(f, p, m, factors):
            continue
        if not is_compatible(f, p, m, table):
            continue
        return f
    raise RuntimeError(f"no conway polynomial found for ({p}, {m})")


def _eval_mod_p(f, v, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * v + c) % p
    return acc


def main():
    table = {}
    lines = []
    for p, m in sorted(TARGETS):
        f = conway(p, m, table)
        table[(p, m)] = f
        lines.append(f"{p} {m} " + " ".join(str(c) for c in f))
        print(lines[-1])
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(
        "# Conway polynomials: p m c0 c1 ... cm (ascending-degree coefficients)\n"
        + "\n".join(lines) + "\n"
    )
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
