"""Apparent distance of hypermatrices and the minimum-apparent-distance algorithm.

Only the zero/nonzero pattern of a hypermatrix matters here, so everything
works on boolean arrays wrapped in :class:`SupportHypermatrix`.  Axes are
numbered from 1 in reports (axis 1 indexes rows of a matrix), levels from 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .bounds import BCH, BoundSet
from .orbits import OrbitSet, orbit_closure, orbit_members


def _as_bounds(B) -> BoundSet:
    if B is None:
        return BoundSet((BCH,))
    return B if isinstance(B, BoundSet) else BoundSet(B)


@dataclass(frozen=True, eq=False)
class SupportHypermatrix:
    """Zero/nonzero pattern of an I-hypermatrix.

    ``q`` is only needed by orbit-aware operations (bmad and friends).
    """

    pattern: np.ndarray
    q: int | None = None

    def __post_init__(self):
        p = np.array(self.pattern, dtype=bool)
        if p.ndim < 1:
            raise ValueError("a hypermatrix needs at least one axis")
        p.setflags(write=False)
        object.__setattr__(self, "pattern", p)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self.pattern.shape)

    @property
    def s(self) -> int:
        return self.pattern.ndim

    def is_zero(self) -> bool:
        return not self.pattern.any()

    def weight(self) -> int:
        return int(self.pattern.sum())

    def hypercolumn(self, axis: int, level: int) -> "SupportHypermatrix":
        """H_M(axis, level) as an (s-1)-dimensional pattern; axis is 1-based."""
        return SupportHypermatrix(np.take(self.pattern, level, axis=axis - 1), self.q)

    def is_orbit_pattern(self) -> bool:
        if self.q is None:
            return False
        dims = self.dims
        idx = np.indices(dims)
        scaled = tuple((idx[k] * self.q) % dims[k] for k in range(len(dims)))
        return bool(np.array_equal(self.pattern[scaled], self.pattern))

    def support(self) -> OrbitSet:
        if not self.is_orbit_pattern():
            raise ValueError("support is not a union of q-orbits")
        return OrbitSet.from_mask(self.pattern, self.q)

    def orbit_reps(self) -> list[tuple[int, ...]]:
        return self.support().reps()

    def __le__(self, other: "SupportHypermatrix") -> bool:
        if self.dims != other.dims:
            raise ValueError("hypermatrices of different shapes")
        return bool(np.all(~self.pattern | other.pattern))

    def __lt__(self, other: "SupportHypermatrix") -> bool:
        return self <= other and not self == other

    def __eq__(self, other):
        if not isinstance(other, SupportHypermatrix):
            return NotImplemented
        return self.dims == other.dims and bool(np.array_equal(self.pattern, other.pattern))

    def __hash__(self):
        return hash((self.dims, self.pattern.tobytes()))

    def __repr__(self):
        if self.s == 2:
            rows = "\n".join(" ".join("1" if x else "0" for x in row) for row in self.pattern)
            return f"SupportHypermatrix(dims={self.dims}, q={self.q})\n{rows}"
        return f"SupportHypermatrix(dims={self.dims}, q={self.q}, weight={self.weight()})"


def afforded(D: OrbitSet) -> SupportHypermatrix:
    """M(D): ones exactly off D."""
    if not isinstance(D, OrbitSet):
        raise TypeError("afforded() takes an OrbitSet; use orbit_closure to build one")
    return SupportHypermatrix(~D.mask(), D.q)


def pattern_of(f) -> SupportHypermatrix:
    """Support pattern M(f) of a MultiPoly's coefficients."""
    return SupportHypermatrix(f.support(), f.ctx.q)


def _mask_of(flags: np.ndarray) -> int:
    m = 0
    for i in np.flatnonzero(flags):
        m |= 1 << int(i)
    return m


@lru_cache(maxsize=1 << 18)
def _value(B: BoundSet, shape: tuple[int, ...], raw: bytes) -> int:
    p = np.frombuffer(raw, dtype=bool).reshape(shape)
    return _analyse(B, p)[0]


def _value_of(B: BoundSet, p: np.ndarray) -> int:
    p = np.ascontiguousarray(p, dtype=bool)
    return _value(B, p.shape, p.tobytes())


def _analyse(B: BoundSet, p: np.ndarray):
    """(value, omegas, epsilons, per-axis hypercolumn values) straight from the definition."""
    if not p.any():
        return 0, (), (), ()
    if p.ndim == 1:
        n = p.shape[0]
        return B.evaluate(n, _mask_of(~p)), (), (), ()
    omegas, epsilons, columns = [], [], []
    for j in range(p.ndim):
        r = p.shape[j]
        slabs = np.moveaxis(p, j, 0)
        nz = slabs.reshape(r, -1).any(axis=1)
        vals = tuple(_value_of(B, slabs[k]) if nz[k] else 0 for k in range(r))
        omegas.append(B.evaluate(r, _mask_of(~nz)))
        epsilons.append(max(vals))
        columns.append(vals)
    value = max(w * e for w, e in zip(omegas, epsilons))
    return value, tuple(omegas), tuple(epsilons), tuple(columns)


def vec_apparent(v, B=None) -> int:
    """Apparent distance of a vector pattern: 0 for v = 0, else the bound value on its zero set."""
    p = v.pattern if isinstance(v, SupportHypermatrix) else np.asarray(v, dtype=bool)
    if p.ndim != 1:
        raise ValueError("vec_apparent takes a one-dimensional pattern")
    return _value_of(_as_bounds(B), p)


def apparent_value(M, B=None) -> int:
    """Delta_B(M) only; accepts a SupportHypermatrix or a boolean array."""
    p = M.pattern if isinstance(M, SupportHypermatrix) else np.asarray(M, dtype=bool)
    return _value_of(_as_bounds(B), p)


@dataclass(frozen=True)
class ApparentReport:
    value: int
    omega: tuple[int, ...]
    epsilon: tuple[int, ...]
    delta: tuple[int, ...]
    hypercolumns: tuple[tuple[int, ...], ...] = field(repr=False)
    involved: frozenset = frozenset()

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "omega": list(self.omega),
            "epsilon": list(self.epsilon),
            "delta": list(self.delta),
            "involved": sorted([j, k] for j, k in self.involved),
        }


def hyper_apparent(M: SupportHypermatrix, B=None) -> ApparentReport:
    """Delta_B(M) with its per-axis ingredients and the involved hypercolumns.

    For s = 1 the per-axis fields are empty.
    """
    B = _as_bounds(B)
    p = M.pattern if isinstance(M, SupportHypermatrix) else np.asarray(M, dtype=bool)
    value, omegas, epsilons, columns = _analyse(B, p)
    deltas = tuple(w * e for w, e in zip(omegas, epsilons))
    involved = set()
    if value:
        for j, (d, e, vals) in enumerate(zip(deltas, epsilons, columns)):
            if d == value:
                involved.update((j + 1, k) for k, v in enumerate(vals) if v and v == e)
    return ApparentReport(value, omegas, epsilons, deltas, columns, frozenset(involved))


def involved_set(M: SupportHypermatrix, B=None) -> frozenset:
    """I_p(M): pairs (axis, level) of hypercolumns that attain eps_j on an axis attaining Delta."""
    if M.is_zero():
        raise ValueError("the zero hypermatrix has no involved hypercolumns")
    if M.s < 2:
        raise ValueError("involved hypercolumns need at least two axes")
    return hyper_apparent(M, B).involved


@dataclass(frozen=True)
class MadTrace:
    """Run of the minimum-apparent-distance algorithm.

    ``matrices[i]`` and ``m[i]`` are M_i and m_i; ``deltas[i]`` is Delta_B(M_i).
    """

    matrices: tuple[SupportHypermatrix, ...]
    deltas: tuple[int, ...]
    m: tuple[int, ...]
    early_stop: bool

    @property
    def length(self) -> int:
        return len(self.matrices) - 1

    @property
    def first_min_index(self) -> int:
        return self.m.index(self.m[-1])

    @property
    def result(self) -> int:
        return self.deltas[self.first_min_index]

    @property
    def witness(self) -> SupportHypermatrix:
        return self.matrices[self.first_min_index]

    def to_records(self) -> list[dict]:
        return [
            {"step": i, "support_reps": [list(a) for a in M.orbit_reps()], "delta": d, "m": m}
            for i, (M, d, m) in enumerate(zip(self.matrices, self.deltas, self.m))
        ]


def _require_orbit_matrix(M: SupportHypermatrix) -> None:
    if M.s != 2:
        raise ValueError(f"the algorithm is stated for matrices; got {M.s} axes")
    if not M.is_orbit_pattern():
        raise ValueError("support is not a union of q-orbits")


def _zero_orbits(M: SupportHypermatrix, positions) -> SupportHypermatrix:
    p = M.pattern.copy()
    seen = set()
    for a in positions:
        if a in seen:
            continue
        orb = orbit_members(a, M.q, M.dims)
        seen.update(orb)
        for b in orb:
            p[b] = False
    return SupportHypermatrix(p, M.q)


def bmad(M: SupportHypermatrix, B=None) -> MadTrace:
    """Minimum B-apparent distance of a q-orbits matrix by iterated removal of involved lines."""
    B = _as_bounds(B)
    _require_orbit_matrix(M)
    if M.is_zero():
        raise ValueError("the zero matrix has no nonzero submatrices")
    mats, deltas, ms = [M], [], []
    cur = M
    rep = hyper_apparent(cur, B)
    deltas.append(rep.value)
    ms.append(rep.value)
    early = False
    while True:
        if any(rep.hypercolumns[j - 1][k] == 1 for j, k in rep.involved):
            early = True
            break
        positions = []
        for j, k in rep.involved:
            line = np.take(cur.pattern, k, axis=j - 1)
            for x in np.flatnonzero(line):
                positions.append((k, int(x)) if j == 1 else (int(x), k))
        cur = _zero_orbits(cur, positions)
        if cur.is_zero():
            break
        rep = hyper_apparent(cur, B)
        mats.append(cur)
        deltas.append(rep.value)
        ms.append(min(ms[-1], rep.value))
    return MadTrace(tuple(mats), tuple(deltas), tuple(ms), early)


def orbit_patterns(M: SupportHypermatrix) -> list[np.ndarray]:
    """One boolean mask per q-orbit of supp(M), in representative order."""
    return [o.mask() for o in M.support().orbits()]


def bmad_bruteforce(M: SupportHypermatrix, B=None, orbit_cap: int = 20) -> int:
    """min Delta_B(P) over all nonzero orbit unions P <= M."""
    B = _as_bounds(B)
    if not M.is_orbit_pattern():
        raise ValueError("support is not a union of q-orbits")
    if M.is_zero():
        raise ValueError("the zero matrix has no nonzero submatrices")
    parts = orbit_patterns(M)
    t = len(parts)
    if t > orbit_cap:
        raise ValueError(f"support has {t} orbits, above the cap of {orbit_cap}")
    best = math.inf
    # Gray-code walk: each step toggles one orbit
    cur = np.zeros(M.dims, dtype=bool)
    counts = np.zeros(M.dims, dtype=np.int8)
    prev = 0
    for i in range(1, 1 << t):
        g = i ^ (i >> 1)
        bit = (g ^ prev).bit_length() - 1
        prev = g
        counts += np.where(parts[bit], 1 if g >> bit & 1 else -1, 0).astype(np.int8)
        cur = counts > 0
        best = min(best, _value_of(B, cur))
        if best == 1:
            break
    return int(best)


def nonzero_orbit_submatrices(M: SupportHypermatrix, max_orbits: int | None = None):
    """Yield every nonzero orbit union P <= M, smallest first."""
    parts = orbit_patterns(M)
    top = len(parts) if max_orbits is None else min(max_orbits, len(parts))
    for size in range(1, top + 1):
        for combo in combinations(range(len(parts)), size):
            p = np.zeros(M.dims, dtype=bool)
            for c in combo:
                p |= parts[c]
            yield SupportHypermatrix(p, M.q)


def from_orbit_reps(reps, q: int, dims) -> SupportHypermatrix:
    """Orbit matrix whose support is the closure of reps."""
    return SupportHypermatrix(orbit_closure(reps, q, dims).mask(), q)
