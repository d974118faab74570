"""Abelian codes in F_q(r_1,...,r_s) described by their defining sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .apparent import afforded, bmad
from .gfield import FieldCtx, FieldElement, make_context, primitive_root
from .orbits import OrbitSet, orbit_closure
from .transform import MultiPoly, dft


@dataclass(frozen=True)
class RootSelection:
    """alpha_k = primitive_root(ctx, r_k) ** u_k, one unit exponent per axis."""

    u: tuple[int, ...]

    @classmethod
    def default(cls, s: int) -> "RootSelection":
        return cls((1,) * s)

    def check(self, dims) -> None:
        if len(self.u) != len(dims):
            raise ValueError("one exponent per axis is required")
        for v, r in zip(self.u, dims):
            if math.gcd(v, r) != 1:
                raise ValueError(f"exponent {v} is not a unit modulo {r}")

    def roots(self, ctx: FieldCtx, dims) -> tuple[FieldElement, ...]:
        self.check(dims)
        return tuple(primitive_root(ctx, r) ** (v % r) for v, r in zip(self.u, dims))

    def compose(self, other: "RootSelection", dims) -> "RootSelection":
        """Exponents of (alpha^other) expressed against the base roots."""
        return RootSelection(tuple((a * b) % r for a, b, r in zip(self.u, other.u, dims)))


@dataclass(frozen=True)
class AbelianCode:
    ctx: FieldCtx
    defining_set: OrbitSet
    roots: RootSelection

    def __post_init__(self):
        D = self.defining_set
        if D.q != self.ctx.q:
            raise ValueError(f"defining set uses q={D.q} but the field has q={self.ctx.q}")
        if tuple(self.ctx.lengths) != D.dims:
            raise ValueError(f"field context built for {self.ctx.lengths}, defining set lives in {D.dims}")
        self.roots.check(D.dims)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.defining_set.dims

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def length(self) -> int:
        return math.prod(self.dims)

    def root_elements(self) -> tuple[FieldElement, ...]:
        return self.roots.roots(self.ctx, self.dims)

    def is_zero_code(self) -> bool:
        return len(self.defining_set) == self.length

    def to_dict(self) -> dict:
        return {
            "p": self.ctx.p,
            "m": self.ctx.m,
            "dims": list(self.dims),
            "defining_reps": [list(a) for a in self.defining_set.reps()],
            "roots": list(self.roots.u),
        }


def make_code(p: int, m: int, dims, defining_reps=(), roots=None, ctx: FieldCtx | None = None) -> AbelianCode:
    dims = tuple(dims)
    ctx = ctx or make_context(p, m, dims)
    D = orbit_closure(defining_reps, ctx.q, dims)
    sel = RootSelection(tuple(roots)) if roots is not None else RootSelection.default(len(dims))
    return AbelianCode(ctx, D, sel)


def code_from_dict(d: dict, ctx: FieldCtx | None = None) -> AbelianCode:
    return make_code(d["p"], d.get("m", 1), d["dims"], [tuple(a) for a in d.get("defining_reps", [])], d.get("roots"), ctx)


def code_with_nonzeros(ctx: FieldCtx, nonzeros: OrbitSet, roots: RootSelection | None = None) -> AbelianCode:
    """The code whose defining set is the complement of the given orbit union."""
    return AbelianCode(ctx, nonzeros.complement(), roots or RootSelection.default(len(nonzeros.dims)))


def dimension(C: AbelianCode) -> int:
    return C.length - len(C.defining_set)


def defining_set_of(f: MultiPoly, roots) -> OrbitSet:
    """{i : f(alpha^i) = 0} for f with coefficients in F_q."""
    if not f.has_base_coeffs():
        raise ValueError("polynomial has coefficients outside the base field")
    if isinstance(roots, RootSelection):
        roots = roots.roots(f.ctx, f.dims)
    phi = dft(f, roots)
    return OrbitSet.from_mask(phi.coeffs == 0, f.ctx.q)


def rescale_defining_set(C: AbelianCode, new_roots: RootSelection) -> OrbitSet:
    """Defining set of C read against the roots new_roots (exponents relative to the base roots)."""
    new_roots.check(C.dims)
    # beta = base^w and alpha = base^u, so beta = alpha^(w u^-1); f(beta^i) = f(alpha^(w u^-1 i))
    v = tuple(pow(u, -1, r) * w % r for u, w, r in zip(C.roots.u, new_roots.u, C.dims))
    inv = tuple(pow(x, -1, r) for x, r in zip(v, C.dims))
    return C.defining_set.scaled(inv)


def code_apparent_at(C: AbelianCode, roots: RootSelection | None = None, B=None) -> int:
    """Delta_{B,alpha}(C) = B-mad of the matrix afforded by D_alpha(C); 0 for the zero code."""
    D = C.defining_set if roots is None else rescale_defining_set(C, roots)
    if len(D) == C.length:
        return 0
    return bmad(afforded(D), B).result


def unit_classes(q: int, dims, full: bool = False) -> list[tuple[int, ...]]:
    """Unit exponent tuples, one per class under u -> q u unless full is set."""
    units = [[v for v in range(1, r) if math.gcd(v, r) == 1] or [0] for r in dims]
    seen, out = set(), []
    for u in product(*units):
        if u in seen:
            continue
        out.append(u)
        if full:
            continue
        w = u
        while w not in seen:
            seen.add(w)
            w = tuple((x * q) % r for x, r in zip(w, dims))
    return out


def code_apparent(C: AbelianCode, B=None, full: bool = False) -> int:
    """Delta_B(C): max of code_apparent_at over all root selections."""
    best = 0
    for u in unit_classes(C.q, C.dims, full):
        u = tuple(x if r > 1 else 1 for x, r in zip(u, C.dims))
        best = max(best, code_apparent_at(C, RootSelection(u), B))
    return best
