"""Cyclotomic cosets of Z/NZ with respect to q^2, and defining sets.

A coset is the orbit of an exponent under multiplication by q^2 modulo N;
its representative is the smallest member.  Defining sets are unions of
cosets, optionally including the singleton coset {0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import Exhausted, IndexOutOfRange, NotADivisor, NotCoprime, NotCosetClosed


@dataclass(frozen=True, eq=False)
class CosetSystem:
    """All cyclotomic cosets of Z/NZ under multiplication by q^2."""

    modulus: int               # N
    q: int
    multiplier: int            # q^2 mod N
    cosets: tuple[tuple[int, ...], ...]  # sorted members, ordered by representative
    reps: tuple[int, ...]      # reps[0] == 0, strictly increasing
    index: dict[int, int]      # element -> coset position

    def coset_of(self, e: int) -> tuple[int, ...]:
        return self.cosets[self.index[e % self.modulus]]

    @property
    def num_nonzero(self) -> int:
        return len(self.reps) - 1


def build_cosets(N: int, q: int) -> CosetSystem:
    """Partition {0, ..., N-1} into cyclotomic cosets w.r.t. q^2."""
    if N < 1:
        raise ValueError("modulus must be positive")
    if gcd(N, q) != 1:
        raise NotCoprime(f"gcd({N}, {q}) != 1")
    return _build_cosets_cached(N, q)


@lru_cache(maxsize=None)
def _build_cosets_cached(N: int, q: int) -> CosetSystem:
    mult = (q * q) % N
    seen = [False] * N
    cosets = []
    index = {}
    for a in range(N):
        if seen[a]:
            continue
        orbit = []
        e = a
        while not seen[e]:
            seen[e] = True
            orbit.append(e)
            e = (e * mult) % N
        pos = len(cosets)
        cosets.append(tuple(sorted(orbit)))
        for e in orbit:
            index[e] = pos
    reps = tuple(c[0] for c in cosets)
    return CosetSystem(modulus=N, q=q, multiplier=mult,
                       cosets=tuple(cosets), reps=reps, index=index)


@dataclass(frozen=True, eq=False)
class DefiningSet:
    """A union of cyclotomic cosets, the exponent set of a code."""

    system: CosetSystem
    rep_indices: tuple[int, ...]   # positions of the selected nonzero cosets
    includes_zero: bool

    @property
    def elements(self) -> tuple[int, ...]:
        out = [0] if self.includes_zero else []
        for i in self.rep_indices:
            out.extend(self.system.cosets[i])
        return tuple(sorted(out))

    @property
    def reps(self) -> tuple[int, ...]:
        """Representatives of the selected nonzero cosets, ascending."""
        return tuple(self.system.reps[i] for i in sorted(self.rep_indices))

    @property
    def max_representative(self) -> int:
        """Largest selected representative (0 for the empty selection)."""
        if not self.rep_indices:
            return 0
        return max(self.system.reps[i] for i in self.rep_indices)

    @property
    def size(self) -> int:
        n = sum(len(self.system.cosets[i]) for i in self.rep_indices)
        return n + (1 if self.includes_zero else 0)


def defining_set(system: CosetSystem, tau: int, include_zero: bool = False) -> DefiningSet:
    """Narrow-sense defining set: the first tau nonzero cosets by representative."""
    if not 1 <= tau <= system.num_nonzero:
        raise IndexOutOfRange(f"tau must be in [1, {system.num_nonzero}]")
    return DefiningSet(system=system, rep_indices=tuple(range(1, tau + 1)),
                       includes_zero=include_zero)


def defining_set_from_reps(system: CosetSystem, reps, include_zero: bool = False) -> DefiningSet:
    """Defining set from an explicit list of coset representative values."""
    indices = []
    for r in reps:
        r = int(r) % system.modulus
        pos = system.index.get(r)
        if pos is None or system.reps[pos] != r:
            raise IndexOutOfRange(f"{r} is not a coset representative mod {system.modulus}")
        if pos == 0:
            raise IndexOutOfRange("select the zero coset via include_zero")
        indices.append(pos)
    return DefiningSet(system=system, rep_indices=tuple(sorted(set(indices))),
                       includes_zero=include_zero)


def reduce_mod(delta: DefiningSet, n1: int) -> DefiningSet:
    """Reduce every exponent modulo n1; the result is again coset-closed."""
    N = delta.system.modulus
    if n1 < 1 or N % n1:
        raise NotADivisor(f"{n1} does not divide {N}")
    target = build_cosets(n1, delta.system.q)
    reduced = {e % n1 for e in delta.elements}
    includes_zero = 0 in reduced
    indices = sorted({target.index[e] for e in reduced if e != 0})
    covered = set([0] if includes_zero else [])
    for i in indices:
        covered.update(target.cosets[i])
    if covered != reduced:
        raise NotCosetClosed(
            f"reduction mod {n1} did not land on full cosets (internal bug)")
    return DefiningSet(system=target, rep_indices=tuple(indices),
                       includes_zero=includes_zero)


def next_representative(delta: DefiningSet) -> int:
    """Smallest nonzero representative whose coset is absent from delta."""
    selected = set(delta.rep_indices)
    for pos in range(1, len(delta.system.reps)):
        if pos not in selected:
            return delta.system.reps[pos]
    raise Exhausted("the defining set already covers every coset")
