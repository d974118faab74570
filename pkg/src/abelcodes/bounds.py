"""Defining-set bounds for cyclic codes and their optimal values.

A ds-bound assigns to every subset N of Z_n the largest distance it can
certify for a cyclic code whose defining set contains N.  Subsets are passed
around as integer bitmasks (bit i set iff i in N) so results can be cached.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Protocol, Sequence, runtime_checkable

import numpy as np


def to_mask(N: Iterable[int], n: int) -> int:
    m = 0
    for i in N:
        m |= 1 << (int(i) % n)
    return m


def from_mask(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask >> i & 1]


@runtime_checkable
class DsBound(Protocol):
    """Plugin interface: a named ds-bound with an optimal-value function.

    ``optimal(n, mask)`` must return at least 1, return 1 on the empty set,
    and be monotone under inclusion.
    """

    name: str

    def optimal(self, n: int, mask: int) -> int: ...


def _run_lengths(n: int, mask: int) -> np.ndarray:
    """R[b] = length of the circular run of members of N starting at b (capped at n)."""
    member = np.array([mask >> i & 1 for i in range(n)], dtype=np.int64)
    if member.all():
        return np.full(n, n, dtype=np.int64)
    R = np.zeros(n, dtype=np.int64)
    # walk backwards twice around the circle so wrap-around runs are counted
    run = 0
    for k in range(2 * n - 1, -1, -1):
        i = k % n
        run = run + 1 if member[i] else 0
        if k < n:
            R[i] = run
    return R


@lru_cache(maxsize=1 << 16)
def bch_optimal(n: int, mask: int) -> int:
    """1 + the longest circular run of consecutive residues inside N."""
    if mask == 0:
        return 1
    return 1 + int(_run_lengths(n, mask).max())


@lru_cache(maxsize=1 << 16)
def ht_optimal(n: int, mask: int) -> int:
    """Hartmann-Tzeng value with unit step c: max delta + s over admissible (b, delta, s, c).

    The pattern is {b + i1 + i2 c : 0 <= i1 <= delta-2, 0 <= i2 <= s} with
    gcd(c, n) = 1.  For fixed (b, c) the best value is max_t (m_t + 1 + t),
    where m_t is the prefix minimum of the run lengths at b, b+c, ..., b+tc.
    """
    if mask == 0:
        return 1
    R = _run_lengths(n, mask)
    if R.min() == n:
        return n + 1
    best = 1 + int(R.max())
    b = np.arange(n)
    t = np.arange(n)
    for c in range(1, n):
        if math.gcd(c, n) != 1:
            continue
        pos = (b[:, None] + t[None, :] * c) % n
        m = np.minimum.accumulate(R[pos], axis=1)
        val = np.where(m >= 1, m + 1 + t[None, :], 0)
        best = max(best, int(val.max()))
    return best


class BCHBound:
    name = "bch"

    def optimal(self, n: int, mask: int) -> int:
        return bch_optimal(n, mask)

    def __repr__(self):
        return "BCHBound()"


class HTBound:
    name = "ht"

    def optimal(self, n: int, mask: int) -> int:
        return ht_optimal(n, mask)

    def __repr__(self):
        return "HTBound()"


BCH = BCHBound()
HT = HTBound()

BUILTIN = {"bch": BCH, "ht": HT}


class BoundSet(tuple):
    """A non-empty set of ds-bounds that always includes BCH.

    Stored as a tuple with BCH first and duplicates dropped; equality ignores order.
    """

    def __new__(cls, bounds: Sequence[DsBound] = (BCH,)):
        bounds = tuple(bounds)
        for b in bounds:
            if not isinstance(b, DsBound):
                raise TypeError(f"{b!r} does not implement the ds-bound interface")
        rest = [b for b in bounds if b.name != "bch"]
        bch = next((b for b in bounds if b.name == "bch"), BCH)
        uniq, seen = [bch], {id(bch)}
        for b in rest:
            if id(b) not in seen:
                seen.add(id(b))
                uniq.append(b)
        return super().__new__(cls, uniq)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(b.name for b in self)

    def evaluate(self, n: int, mask: int) -> int:
        return _eval_cached(self, n, mask)

    def __hash__(self):
        return hash(frozenset(map(id, self)))

    def __eq__(self, other):
        return isinstance(other, BoundSet) and frozenset(map(id, self)) == frozenset(map(id, other))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return f"BoundSet({','.join(self.names)})"


@lru_cache(maxsize=1 << 18)
def _eval_cached(B: BoundSet, n: int, mask: int) -> int:
    return max(b.optimal(n, mask) for b in B)


def bound_set(spec: str | Sequence[str] = "bch") -> BoundSet:
    """Parse 'bch' / 'bch,ht' (or a list of names) into a BoundSet."""
    names = spec.split(",") if isinstance(spec, str) else list(spec)
    try:
        return BoundSet([BUILTIN[name.strip().lower()] for name in names if name.strip()])
    except KeyError as err:
        raise ValueError(f"unknown bound {err.args[0]!r}; available: {sorted(BUILTIN)}") from None


def bound_set_eval(B: BoundSet, n: int, N) -> int:
    """max over the bounds of B of their optimal value on N (a set or a bitmask)."""
    mask = N if isinstance(N, int) else to_mask(N, n)
    return B.evaluate(n, mask)
