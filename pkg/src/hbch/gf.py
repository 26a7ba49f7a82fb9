"""Exact arithmetic in GF(p^m) and in towers GF(q^2) inside GF(q^(2s)).

Elements are encoded as integers: 0 is the zero element and e >= 1 stands
for g**(e-1), where g is the root of the field's defining polynomial (a
bundled Conway polynomial unless the caller supplies one).  The encoding
makes multiplication O(1) index arithmetic; addition goes through a
precomputed Zech-logarithm table.  `FieldCtx.to_poly`/`from_poly` convert
between the encoding and the usual packed polynomial representation.

Conway polynomials keep subfield embeddings canonical: the tower embedding
GF(q^2) -> GF(q^(2s)) maps the small primitive element to
g**((q^(2s)-1)/(q^2-1)) and is a field homomorphism by the norm
compatibility of the bundled table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from . import _kernels
from .errors import (
    AlphabetMismatch,
    DivisionByZero,
    FieldTooLarge,
    NoBundledModulus,
    NonPrime,
    NonPrimitiveModulus,
    NotADivisor,
    ReducibleModulus,
)

MAX_FIELD_ORDER = 1 << 24


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p), coefficient tuples in ascending degree
# (used for modulus validation and by tools/gen_conway_polynomials.py)

def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mulmod(a, b, f, p):
    """(a * b) mod f over GF(p); f monic."""
    if not a or not b:
        return ()
    m = len(f) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    for d in range(len(out) - 1, m - 1, -1):
        t = out[d]
        if t == 0:
            continue
        for j in range(m + 1):
            out[d - m + j] = (out[d - m + j] - t * f[j]) % p
    return poly_trim(out[:m])


def poly_powmod(base, e, f, p):
    """base**e mod f over GF(p)."""
    result = (1,)
    base = poly_trim(base)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, f, p)
        base = poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def poly_gcd(a, b, p):
    a, b = poly_trim(a), poly_trim(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p) if p > 2 else b[-1]
        bm = tuple((c * inv_lead) % p for c in b)
        r = list(a)
        while len(r) >= len(bm) and poly_trim(r):
            if r[-1] == 0:
                r.pop()
                continue
            t = r[-1]
            shift = len(r) - len(bm)
            for j in range(len(bm)):
                r[shift + j] = (r[shift + j] - t * bm[j]) % p
            r.pop()
        a, b = b, poly_trim(r)
    return a


def is_irreducible(f, p):
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    f = tuple(c % p for c in f)
    m = len(f) - 1
    if m == 0:
        return False
    if m == 1:
        return True
    x = (0, 1)
    xq = poly_powmod(x, p ** m, f, p)
    if _poly_sub(xq, x, p) != ():
        return False
    for r in _prime_factors(m):
        g = poly_powmod(x, p ** (m // r), f, p)
        g = _poly_sub(g, x, p)
        if len(poly_gcd(g, f, p)) > 1:
            return False
    return True


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return poly_trim(out)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# bundled Conway polynomial table

_CONWAY_CACHE: dict[tuple[int, int], tuple[int, ...]] | None = None


def conway_table() -> dict[tuple[int, int], tuple[int, ...]]:
    """Parse data/conway_polynomials.txt: lines of "p m c0 c1 ... cm"."""
    global _CONWAY_CACHE
    if _CONWAY_CACHE is None:
        table = {}
        text = resources.files(__package__).joinpath("data/conway_polynomials.txt").read_text()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [int(t) for t in line.split()]
            p, m, coeffs = parts[0], parts[1], tuple(parts[2:])
            if len(coeffs) != m + 1:
                raise ValueError(f"malformed conway table line: {line!r}")
            table[(p, m)] = coeffs
        _CONWAY_CACHE = table
    return _CONWAY_CACHE


def conway_polynomial(p: int, m: int) -> tuple[int, ...]:
    try:
        return conway_table()[(p, m)]
    except KeyError:
        raise NoBundledModulus(f"no bundled defining polynomial for GF({p}^{m})") from None


# ---------------------------------------------------------------------------
# field context

@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable context for GF(p^m) with Zech-log arithmetic.

    exp[i] is the packed polynomial value of g**i (the antilog table) and
    log inverts it (log[0] = -1).  zech[d] is the discrete log of
    1 + g**d, or -1 when that sum is zero.  `half` is the discrete log of
    -1 (0 in characteristic 2).
    """

    p: int
    m: int
    order: int
    modulus: tuple[int, ...]
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    zech: np.ndarray = field(repr=False)
    half: int = field(repr=False)

    # -- scalar/array element operations --------------------------------

    def _is_array(self, *xs):
        return any(isinstance(x, np.ndarray) for x in xs)

    def add(self, a, b):
        if self._is_array(a, b):
            return _kernels.vadd(a, b, self.order, self.zech)
        if a == 0:
            return b
        if b == 0:
            return a
        qm1 = self.order - 1
        z = int(self.zech[(b - a) % qm1])
        return 0 if z < 0 else (a - 1 + z) % qm1 + 1

    def neg(self, a):
        if self._is_array(a):
            return _kernels.vneg(a, self.order, self.half)
        return 0 if a == 0 else (a - 1 + self.half) % (self.order - 1) + 1

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self._is_array(a, b):
            return _kernels.vmul(a, b, self.order)
        if a == 0 or b == 0:
            return 0
        return (a + b - 2) % (self.order - 1) + 1

    def inv(self, a):
        if isinstance(a, np.ndarray):
            if np.any(a == 0):
                raise DivisionByZero("inverse of the zero element")
            qm1 = self.order - 1
            return (qm1 - (a - 1)) % qm1 + 1
        if a == 0:
            raise DivisionByZero("inverse of the zero element")
        qm1 = self.order - 1
        return (qm1 - (a - 1)) % qm1 + 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """a**e for integer e >= 0, with 0**0 == 1."""
        if self._is_array(a):
            return _kernels.vpow(a, e, self.order)
        if a == 0:
            return 1 if e == 0 else 0
        qm1 = self.order - 1
        return ((a - 1) * (e % qm1)) % qm1 + 1

    # -- representation conversions --------------------------------------

    def to_poly(self, e):
        """Packed polynomial value (base-p digits) of an encoded element."""
        if isinstance(e, np.ndarray):
            out = np.zeros_like(e)
            nz = e != 0
            out[nz] = self.exp[e[nz] - 1]
            return out
        return 0 if e == 0 else int(self.exp[e - 1])

    def from_poly(self, v):
        """Encoded element for a packed polynomial value."""
        if v == 0:
            return 0
        d = int(self.log[v])
        if d < 0:
            raise AlphabetMismatch(f"value {v} is not a field element")
        return d + 1

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"FieldCtx(GF({self.p}^{self.m}), modulus={self.modulus})"


def _validate_prime(p):
    if not _is_prime(p):
        raise NonPrime(f"{p} is not prime")


def build_field(p: int, m: int, modulus=None) -> FieldCtx:
    """Construct GF(p^m) with a primitive defining polynomial.

    Without an explicit modulus the bundled Conway polynomial is used,
    which keeps subfield embeddings compatible across the tower.
    """
    _validate_prime(p)
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    order = p ** m
    if order > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the supported size 2^24")
    if modulus is None:
        return _default_field(p, m)
    return _build_field_checked(p, m, tuple(int(c) % p for c in modulus))


@lru_cache(maxsize=None)
def _default_field(p, m):
    return _build_field_checked(p, m, conway_polynomial(p, m))


def _build_field_checked(p, m, modulus):
    if len(modulus) != m + 1 or modulus[m] == 0:
        raise ReducibleModulus(f"modulus must have degree exactly {m}")
    if modulus[m] != 1:
        inv_lead = pow(modulus[m], p - 2, p)
        modulus = tuple((c * inv_lead) % p for c in modulus)
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
    order = p ** m
    exp = _kernels.exp_table(p, m, np.asarray(modulus, dtype=np.int64), order)
    if m > 1 and np.any(exp[1:] == 1):
        raise NonPrimitiveModulus(f"modulus {modulus} is irreducible but not primitive")
    log = np.full(order, -1, dtype=np.int64)
    log[exp] = np.arange(order - 1, dtype=np.int64)
    # adding 1 only changes the constant base-p digit, so 1 + g**d vectorises
    if p == 2:
        plus_one = exp ^ 1
    else:
        d0 = exp % p
        plus_one = exp - d0 + (d0 + 1) % p
    zech = log[plus_one]
    half = 0 if p == 2 else (order - 1) // 2
    for arr in (exp, log, zech):
        arr.setflags(write=False)
    return FieldCtx(p=p, m=m, order=order, modulus=modulus,
                    exp=exp, log=log, zech=zech, half=half)


# ---------------------------------------------------------------------------
# tower GF(q^2) inside GF(q^(2s))

@dataclass(frozen=True, eq=False)
class FieldTower:
    """The pair GF(q^2) < GF(q^(2s)) with the canonical embedding."""

    q: int
    s: int
    p: int
    small: FieldCtx
    big: FieldCtx
    ratio: int  # (q^(2s)-1) / (q^2-1)

    @property
    def gamma(self) -> int:
        """Primitive element of the big field (discrete log 1)."""
        return 2

    def embed(self, x):
        """Injection GF(q^2) -> GF(q^(2s))."""
        qm1 = self.big.order - 1
        if isinstance(x, np.ndarray):
            return np.where(x == 0, 0, ((x - 1) * self.ratio) % qm1 + 1)
        return 0 if x == 0 else ((x - 1) * self.ratio) % qm1 + 1

    def shrink(self, x):
        """Inverse of embed; raises AlphabetMismatch off the subfield."""
        if isinstance(x, np.ndarray):
            i = x - 1
            if np.any((x != 0) & (i % self.ratio != 0)):
                raise AlphabetMismatch("element outside the embedded subfield")
            return np.where(x == 0, 0, i // self.ratio + 1)
        if x == 0:
            return 0
        i = x - 1
        if i % self.ratio:
            raise AlphabetMismatch("element outside the embedded subfield")
        return i // self.ratio + 1

    def frobenius(self, x, j: int):
        """x**((q^2)^j) on the big field; 0 <= j < s."""
        if not 0 <= j < self.s:
            raise ValueError("frobenius power out of range")
        return self.big.pow(x, (self.q ** 2) ** j)

    def trace_to_small(self, x):
        """Sum of the s Frobenius conjugates; lands in the embedded subfield."""
        q2 = self.q ** 2
        acc = x if not isinstance(x, np.ndarray) else x.copy()
        power = 1
        for _ in range(self.s - 1):
            power *= q2
            acc = self.big.add(acc, self.big.pow(x, power))
        return acc


def _prime_power(q):
    for p in _prime_factors(q):
        e = 0
        v = q
        while v % p == 0:
            v //= p
            e += 1
        if v == 1:
            return p, e
    raise NonPrime(f"{q} is not a prime power")


def build_tower(q: int, s: int) -> FieldTower:
    """Build GF(q^2) < GF(q^(2s)) with compatible defining polynomials."""
    if s < 1:
        raise ValueError("tower parameter s must be >= 1")
    p, e = _prime_power(q)
    small = build_field(p, 2 * e)
    big = build_field(p, 2 * e * s)
    ratio = (big.order - 1) // (small.order - 1)
    return FieldTower(q=q, s=s, p=p, small=small, big=big, ratio=ratio)


# ---------------------------------------------------------------------------
# spec-level operation wrappers

def frobenius(tower: FieldTower, x, j: int):
    return tower.frobenius(x, j)


def trace_to_small(tower: FieldTower, x):
    return tower.trace_to_small(x)


def root_of_unity(tower: FieldTower, n1: int) -> int:
    """gamma**((q^(2s)-1)/n1): a primitive n1-th root of unity."""
    qm1 = tower.big.order - 1
    if n1 < 1 or qm1 % n1:
        raise NotADivisor(f"{n1} does not divide {qm1}")
    return (qm1 // n1) % qm1 + 1
