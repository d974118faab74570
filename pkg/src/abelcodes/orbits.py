"""q-cyclotomic cosets and q-orbits inside the index box Z_r1 x ... x Z_rs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

DENSE_LIMIT = 1 << 22


def _scale(a: tuple[int, ...], u, dims: tuple[int, ...]) -> tuple[int, ...]:
    if isinstance(u, int):
        return tuple((x * u) % r for x, r in zip(a, dims))
    return tuple((x * v) % r for x, v, r in zip(a, u, dims))


def orbit_members(a, q: int, dims) -> list[tuple[int, ...]]:
    """The q-orbit of a, in order of appearance a, q a, q^2 a, ..."""
    dims = tuple(dims)
    a = tuple(int(x) % r for x, r in zip(a, dims))
    out = [a]
    b = _scale(a, q, dims)
    while b != a:
        out.append(b)
        b = _scale(b, q, dims)
    return out


@dataclass(frozen=True)
class OrbitSet:
    """A union of q-orbits in I, stored as its member set.

    Equality and hashing use the member set, so two OrbitSets built from
    different representatives of the same orbits compare equal.
    """

    dims: tuple[int, ...]
    q: int
    members: frozenset

    def __post_init__(self):
        for a in self.members:
            if len(a) != len(self.dims) or any(not 0 <= x < r for x, r in zip(a, self.dims)):
                raise ValueError(f"index {a} outside dims {self.dims}")
            if _scale(a, self.q, self.dims) not in self.members:
                raise ValueError(f"member set is not closed under multiplication by q={self.q}")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, a):
        return tuple(a) in self.members

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def reps(self) -> list[tuple[int, ...]]:
        """Sorted orbit representatives (lexicographic minimum of each orbit)."""
        seen, out = set(), []
        for a in sorted(self.members):
            if a not in seen:
                orb = orbit_members(a, self.q, self.dims)
                seen.update(orb)
                out.append(min(orb))
        return sorted(out)

    def orbits(self) -> list["OrbitSet"]:
        return [q_orbit(a, self.q, self.dims) for a in self.reps()]

    def union(self, other: "OrbitSet") -> "OrbitSet":
        _same_box(self, other)
        return OrbitSet(self.dims, self.q, self.members | other.members)

    def difference(self, other: "OrbitSet") -> "OrbitSet":
        _same_box(self, other)
        return OrbitSet(self.dims, self.q, self.members - other.members)

    def complement(self) -> "OrbitSet":
        return OrbitSet(self.dims, self.q, frozenset(index_box(self.dims)) - self.members)

    def issubset(self, other: "OrbitSet") -> bool:
        _same_box(self, other)
        return self.members <= other.members

    def mask(self) -> np.ndarray:
        """Dense boolean array over I, True on members."""
        out = np.zeros(self.dims, dtype=bool)
        for a in self.members:
            out[a] = True
        return out

    def scaled(self, u) -> "OrbitSet":
        """Image under i -> u*i coordinatewise; u must be units modulo each length."""
        u = (u,) * len(self.dims) if isinstance(u, int) else tuple(u)
        for v, r in zip(u, self.dims):
            if math.gcd(v, r) != 1:
                raise ValueError(f"{v} is not a unit modulo {r}")
        return OrbitSet(self.dims, self.q, frozenset(_scale(a, u, self.dims) for a in self.members))

    @classmethod
    def empty(cls, dims, q: int) -> "OrbitSet":
        return cls(tuple(dims), q, frozenset())

    @classmethod
    def full(cls, dims, q: int) -> "OrbitSet":
        return cls(tuple(dims), q, frozenset(index_box(dims)))

    @classmethod
    def from_reps(cls, reps, q: int, dims) -> "OrbitSet":
        return orbit_closure(reps, q, dims)

    @classmethod
    def from_mask(cls, mask: np.ndarray, q: int) -> "OrbitSet":
        idx = frozenset(tuple(int(x) for x in a) for a in np.argwhere(mask))
        return cls(tuple(mask.shape), q, idx)


def _same_box(a: OrbitSet, b: OrbitSet) -> None:
    if a.dims != b.dims or a.q != b.q:
        raise ValueError("orbit sets live in different index boxes")


def index_box(dims):
    return product(*(range(r) for r in dims))


def q_orbit(a, q: int, dims) -> OrbitSet:
    dims = tuple(dims)
    if len(a) != len(dims) or any(not 0 <= x < r for x, r in zip(a, dims)):
        raise ValueError(f"index {tuple(a)} outside dims {dims}")
    return OrbitSet(dims, q, frozenset(orbit_members(a, q, dims)))


def cyclotomic_coset(b: int, q: int, n: int) -> list[int]:
    """C_q(b) modulo n as a sorted list."""
    return sorted(x[0] for x in orbit_members((b % n,), q, (n,)))


def orbit_closure(S, q: int, dims) -> OrbitSet:
    """Smallest union of q-orbits containing every index of S."""
    dims = tuple(dims)
    out = set()
    for a in S:
        a = tuple(int(x) for x in a)
        if a in out:
            continue
        if len(a) != len(dims) or any(not 0 <= x < r for x, r in zip(a, dims)):
            raise ValueError(f"index {a} outside dims {dims}")
        out.update(orbit_members(a, q, dims))
    return OrbitSet(dims, q, frozenset(out))


def is_orbit_union(S, q: int, dims) -> bool:
    S = {tuple(a) for a in S}
    return all(_scale(a, q, tuple(dims)) in S for a in S)


def orbit_partition(q: int, dims) -> list[OrbitSet]:
    """All q-orbits of I, sorted by representative."""
    dims = tuple(dims)
    for r in dims:
        if math.gcd(q, r) != 1:
            raise ValueError(f"q={q} is not coprime to length {r}")
    seen, out = set(), []
    for a in index_box(dims):
        if a not in seen:
            orb = orbit_members(a, q, dims)
            seen.update(orb)
            out.append(OrbitSet(dims, q, frozenset(orb)))
    return out
