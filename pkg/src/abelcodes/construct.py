"""Codes whose apparent distance is their true minimum distance.

Bivariate only.  The bound set is the BCH bound unless stated otherwise,
because the equality Delta(M(g)) = |Zbar(g)| is only controlled through
consecutive runs of zero coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .apparent import (
    SupportHypermatrix,
    afforded,
    apparent_value,
    bmad,
    hyper_apparent,
    orbit_patterns,
    pattern_of,
    vec_apparent,
)
from .codes import AbelianCode, RootSelection, code_apparent_at, dimension
from .gfield import FieldCtx, FieldElement
from .orbits import OrbitSet, cyclotomic_coset, orbit_closure
from .transform import (
    MultiPoly,
    _as_univariate,
    dft,
    from_pattern,
    idft,
    lift,
    nonzero_root_count,
    outer,
    poly_divmod,
    poly_gcd,
    poly_mul,
    x_power_minus_one,
)


def _univariate(ctx: FieldCtx, coeffs, r: int) -> MultiPoly:
    return _as_univariate(ctx, [int(c) for c in coeffs], r)


def apparent_1var(a: MultiPoly, B=None) -> int:
    """Delta(M(a)) for a univariate polynomial."""
    return vec_apparent(a.support(), B)


# --- the condition Delta_1 = Delta_2 = Delta = |Zbar(g)| and g = abF ---------------


@dataclass
class FactorAnalysis:
    holds: bool
    value: int
    zbar: int
    omega: tuple[int, int]
    epsilon: tuple[int, int]
    delta: tuple[int, int]
    involved_rows: tuple[int, ...]  # M_1
    involved_cols: tuple[int, ...]  # M_2
    zbar_proj: tuple[tuple[int, ...], tuple[int, ...]]
    a: MultiPoly | None = None
    b: MultiPoly | None = None
    F: MultiPoly | None = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "value": self.value,
            "zbar": self.zbar,
            "omega": list(self.omega),
            "epsilon": list(self.epsilon),
            "delta": list(self.delta),
            "M1": list(self.involved_rows),
            "M2": list(self.involved_cols),
        }


def check_condition_imposed(g: MultiPoly, roots, B=None) -> tuple[bool, FactorAnalysis]:
    """Test Delta_1(M) = Delta_2(M) = Delta(M) = |Zbar(g)| for M = M(g)."""
    if g.s != 2:
        raise ValueError("the condition is stated for two variables")
    if g.is_zero():
        raise ValueError("g must be nonzero")
    if isinstance(roots, RootSelection):
        roots = roots.roots(g.ctx, g.dims)
    rep = hyper_apparent(pattern_of(g), B)
    nz = dft(g, roots).support()
    zbar = int(nz.sum())
    holds = rep.delta[0] == rep.delta[1] == rep.value == zbar
    rows = tuple(sorted(k for j, k in rep.involved if j == 1))
    cols = tuple(sorted(k for j, k in rep.involved if j == 2))
    proj = (tuple(np.flatnonzero(nz.any(axis=1)).tolist()), tuple(np.flatnonzero(nz.any(axis=0)).tolist()))
    return holds, FactorAnalysis(holds, rep.value, zbar, rep.omega, rep.epsilon, rep.delta, rows, cols, proj)


def _divide_all(ctx, polys, d):
    out = []
    for p in polys:
        quo, rem = poly_divmod(ctx, p, d)
        if rem:
            raise ArithmeticError("factor does not divide every slice")
        out.append(quo)
    return out


def factor_abF(g: MultiPoly, analysis: FactorAnalysis) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Split g = a(X1) b(X2) F(X1, X2) as genuine polynomials.

    a is the monic gcd of X1^r1 - 1 with the column g_{2,k} for k in M_2, b the
    same with a row for k in M_1, and F the exact quotient.
    """
    if not analysis.holds:
        raise ValueError("g does not satisfy Delta_1 = Delta_2 = Delta = |Zbar(g)|")
    ctx = g.ctx
    r1, r2 = g.dims
    c = g.coeffs
    cols = [lift(MultiPoly(ctx, c[:, k])) for k in range(r2)]
    rows = [lift(MultiPoly(ctx, c[k, :])) for k in range(r1)]
    a = poly_gcd(ctx, x_power_minus_one(ctx, r1), cols[analysis.involved_cols[0]])
    b = poly_gcd(ctx, x_power_minus_one(ctx, r2), rows[analysis.involved_rows[0]])
    # divide every column by a, then every row of the result by b
    q_cols = _divide_all(ctx, cols, a)
    mid = np.zeros((r1, r2), dtype=np.int64)
    for k, p in enumerate(q_cols):
        mid[: len(p), k] = p
    q_rows = _divide_all(ctx, [lift(MultiPoly(ctx, mid[i, :])) for i in range(r1)], b)
    F = np.zeros((r1, r2), dtype=np.int64)
    for i, p in enumerate(q_rows):
        F[i, : len(p)] = p
    a_p, b_p, F_p = _univariate(ctx, a, r1), _univariate(ctx, b, r2), MultiPoly(ctx, F)
    if outer(a_p, b_p) * F_p != g:
        raise ArithmeticError("a b F does not reproduce g")
    analysis.a, analysis.b, analysis.F = a_p, b_p, F_p
    return a_p, b_p, F_p


# --- CP matrices and univariate shift criteria ----------------------------------


def is_cp_matrix(M) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Projections (pi_1, pi_2) if supp(M) is their Cartesian product, else None."""
    p = M.pattern if isinstance(M, SupportHypermatrix) else np.asarray(M, dtype=bool)
    if p.ndim != 2:
        raise ValueError("CP test applies to matrices")
    rows, cols = p.any(axis=1), p.any(axis=0)
    if not np.array_equal(p, np.outer(rows, cols)):
        return None
    return tuple(np.flatnonzero(rows).tolist()), tuple(np.flatnonzero(cols).tolist())


def divisor_shift(a: MultiPoly) -> int | None:
    """Least h such that the degree < r lift of X^h a divides X^r - 1."""
    if a.s != 1 or a.is_zero():
        raise ValueError("nonzero univariate polynomial expected")
    r = a.dims[0]
    target = x_power_minus_one(a.ctx, r)
    for h in range(r):
        if not poly_divmod(a.ctx, target, lift(a.shift(h)))[1]:
            return h
    return None


def is_rational_at(a: MultiPoly, alpha: FieldElement) -> bool:
    """Whether every value a(alpha^i) lies in F_q."""
    return dft(a, (alpha,)).has_base_coeffs()


def rational_shift(a: MultiPoly, alpha: FieldElement, q: int | None = None) -> int | None:
    """Least h such that all values of X^h a at the powers of alpha lie in F_q."""
    if a.s != 1 or a.is_zero():
        raise ValueError("nonzero univariate polynomial expected")
    if q is not None and q != a.ctx.q:
        raise ValueError(f"q={q} does not match the field context (q={a.ctx.q})")
    for h in range(a.dims[0]):
        if is_rational_at(a.shift(h), alpha):
            return h
    return None


def rational_exponents(a: MultiPoly, h: int) -> list[int]:
    """Unit exponents u for which X^h a is rational at primitive_root^u."""
    from .gfield import primitive_root

    r = a.dims[0]
    base = primitive_root(a.ctx, r)
    shifted = a.shift(h)
    return [u for u in range(1, max(r, 2)) if math.gcd(u, r) == 1 and is_rational_at(shifted, base ** (u % r))]


def root_with_minimal_polynomial(ctx: FieldCtx, r: int, poly) -> int:
    """Least unit exponent u whose root primitive_root^u has the given minimal polynomial over F_q."""
    from .gfield import minimal_polynomial, primitive_root

    base = primitive_root(ctx, r)
    want = [int(c) for c in poly]
    for u in range(1, r):
        if math.gcd(u, r) == 1 and [x.value for x in minimal_polynomial(ctx, base**u)] == want:
            return u
    raise ValueError("no primitive root of unity has that minimal polynomial")


# --- construction ------------------------------------------------------------


@dataclass
class Construction:
    code: AbelianCode
    guaranteed_d: int
    witness: MultiPoly  # the codeword, idft of g
    g: MultiPoly  # X1^h1 a * X2^h2 b in the transform domain
    shifts: tuple[int, int]
    delta_factors: tuple[int, int]
    bmad: int

    def certificate(self) -> dict:
        return {
            "guaranteed_d": self.guaranteed_d,
            "witness_weight": self.witness.weight(),
            "bmad": self.bmad,
            "delta_a": self.delta_factors[0],
            "delta_b": self.delta_factors[1],
            "shifts": list(self.shifts),
        }


class ConstructionError(ValueError):
    pass


def construct_true_distance_code(a: MultiPoly, b: MultiPoly, roots: RootSelection, h1: int, h2: int,
                                 ctx: FieldCtx | None = None) -> Construction:
    """Code generated by idft(X1^h1 a * X2^h2 b), with d certified equal to Delta(M(ab))."""
    ctx = ctx or a.ctx
    if a.s != 1 or b.s != 1:
        raise ConstructionError("a and b must be univariate")
    dims = (a.dims[0], b.dims[0])
    if tuple(ctx.lengths) != dims:
        raise ConstructionError(f"field context lengths {ctx.lengths} do not match {dims}")
    for name, f in (("a", a), ("b", b)):
        if f.is_zero():
            raise ConstructionError(f"{name} is zero")
        if poly_divmod(ctx, x_power_minus_one(ctx, f.dims[0]), lift(f))[1]:
            raise ConstructionError(f"{name} does not divide X^{f.dims[0]} - 1")
    alphas = roots.roots(ctx, dims)
    A, Bp = a.shift(h1), b.shift(h2)
    if not is_rational_at(A, alphas[0]):
        raise ConstructionError(f"X^{h1} a is not rational at the chosen root")
    if not is_rational_at(Bp, alphas[1]):
        raise ConstructionError(f"X^{h2} b is not rational at the chosen root")
    g = outer(A, Bp)
    witness = idft(g, alphas)
    if not witness.has_base_coeffs():
        raise ConstructionError("witness is not defined over the base field")
    nonzeros = OrbitSet.from_mask(g.support(), ctx.q)
    code = AbelianCode(ctx, nonzeros.complement(), roots)
    da, db = apparent_1var(A), apparent_1var(Bp)
    d = da * db
    if apparent_value(pattern_of(outer(a, b))) != d:
        raise ConstructionError("Delta(M(ab)) differs from the product of the factor values")
    w = witness.weight()
    m = code_apparent_at(code)
    if w != d or m != d:
        raise ConstructionError(f"certificate failed: witness weight {w}, apparent distance {m}, expected {d}")
    return Construction(code, d, witness, g, (h1, h2), (da, db), m)


def certify_with_witness(C: AbelianCode, witness: MultiPoly, B=None) -> int | None:
    """d(C) if the codeword witness attains the apparent distance of C, else None."""
    if not witness.has_base_coeffs():
        return None
    D = C.defining_set
    phi = dft(witness, C.root_elements())
    if any(phi.coeffs[a] != 0 for a in D):
        return None
    m = code_apparent_at(C, None, B)
    return m if m == witness.weight() else None


# --- verification by search over idempotents ---------------------------------


@dataclass
class Verdict:
    status: str  # "proven" or "inconclusive"
    d: int | None
    bmad: int
    witness: SupportHypermatrix | None
    searched: int
    start_step: int

    def to_dict(self) -> dict:
        out = {"status": self.status, "d": self.d, "bmad": self.bmad, "searched": self.searched,
               "start_step": self.start_step}
        if self.witness is not None:
            out["witness_reps"] = [list(a) for a in self.witness.orbit_reps()]
        return out


def verify_true_distance(C: AbelianCode, B=None, orbit_cap: int = 20) -> Verdict:
    """Look for an orbit submatrix P <= M_{j0} whose idempotent has weight Delta(P) = B-mad(M)."""
    if len(C.dims) != 2:
        raise ValueError("verification is implemented for two variables")
    if C.is_zero_code():
        raise ValueError("the zero code has no minimum distance")
    M = afforded(C.defining_set)
    trace = bmad(M, B)
    mad = trace.result
    j0 = trace.first_min_index
    start = trace.matrices[j0]
    parts = orbit_patterns(start)
    t = len(parts)
    if t > orbit_cap:
        raise ValueError(f"search space has {t} orbits, above the cap of {orbit_cap}")
    ctx, roots = C.ctx, C.root_elements()
    searched = 0
    for size in range(t, 0, -1):
        for combo in combinations(range(t), size):
            p = np.zeros(C.dims, dtype=bool)
            for c in combo:
                p |= parts[c]
            searched += 1
            if apparent_value(p, B) != mad:
                continue
            if idft(from_pattern(ctx, p), roots).weight() == mad:
                return Verdict("proven", mad, mad, SupportHypermatrix(p, C.q), searched, j0)
    return Verdict("inconclusive", None, mad, None, searched, j0)


# --- enlarging a certified code -------------------------------------------------


def prune_defining_set(C: AbelianCode, witness: MultiPoly, B=None) -> AbelianCode:
    """Drop defining-set orbits one at a time (sorted representatives) while the
    apparent distance stays equal to the weight of the witness codeword.
    """
    target = witness.weight()
    if certify_with_witness(C, witness, B) != target:
        raise ValueError("the witness does not certify the starting code")
    cur = C
    for orb in C.defining_set.orbits():
        D = cur.defining_set.difference(orb)
        trial = AbelianCode(C.ctx, D, C.roots)
        if dimension(trial) and code_apparent_at(trial, None, B) == target:
            cur = trial
    return cur


# --- bivariate BCH codes ----------------------------------------------------------


@dataclass(frozen=True)
class BchSpec:
    """Axes gamma (1-based), designed distances and offsets, aligned with gamma."""

    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    offsets: tuple[int, ...]

    def check(self, dims) -> None:
        if not (len(self.gamma) == len(self.delta) == len(self.offsets)):
            raise ValueError("gamma, delta and offsets must have equal lengths")
        for k, d in zip(self.gamma, self.delta):
            if not 1 <= k <= len(dims):
                raise ValueError(f"axis {k} outside 1..{len(dims)}")
            if not 2 <= d <= dims[k - 1]:
                raise ValueError(f"designed distance {d} outside 2..{dims[k - 1]}")

    def to_dict(self) -> dict:
        return {"gamma": list(self.gamma), "delta": list(self.delta), "offsets": list(self.offsets)}


def bch_defining_set(spec: BchSpec, q: int, dims) -> OrbitSet:
    """Union over k in gamma and l < delta_k - 1 of the orbit closure of the stripe i(k) = b_k + l."""
    dims = tuple(dims)
    spec.check(dims)
    idx = np.indices(dims)
    mask = np.zeros(dims, dtype=bool)
    for k, d, b in zip(spec.gamma, spec.delta, spec.offsets):
        r = dims[k - 1]
        for l in range(d - 1):
            mask |= idx[k - 1] == (b + l) % r
    return orbit_closure([tuple(int(x) for x in a) for a in np.argwhere(mask)], q, dims)


def cyclic_bch_parameters(D: set[int], q: int, r: int) -> tuple[int, int] | None:
    """(delta, b) with D equal to the union of C_q(b+l), l = 0..delta-2; maximal delta, least b."""
    D = set(D)
    if not D:
        return None
    best = None
    for b in range(r):
        union: set[int] = set()
        for l in range(r):
            coset = set(cyclotomic_coset(b + l, q, r))
            if not coset <= D:
                break
            union |= coset
            if union == D:
                cand = (l + 2, b)
                if best is None or cand[0] > best[0]:
                    best = cand
    if best is None:
        return None
    return min(best[0], r), best[1]


def recognize_bivariate_bch(C: AbelianCode) -> BchSpec | None:
    """BCH parameters of C when both projected cyclic codes are BCH; None otherwise."""
    M = afforded(C.defining_set)
    proj = is_cp_matrix(M)
    if proj is None:
        raise ValueError("the afforded matrix is not a CP-matrix")
    if M.is_zero():
        return None
    gamma, delta, offs = [], [], []
    for k, (S, r) in enumerate(zip(proj, C.dims), start=1):
        D = set(range(r)) - set(S)
        if not D:
            continue
        found = cyclic_bch_parameters(D, C.q, r)
        if found is None:
            return None
        gamma.append(k)
        delta.append(found[0])
        offs.append(found[1])
    return BchSpec(tuple(gamma), tuple(delta), tuple(offs))


def bch_spec_from_factors(A: MultiPoly, Bp: MultiPoly) -> BchSpec:
    """BCH parameters built from the zero runs of the (already shifted) factors.

    On each axis the designed distance is Delta(M(factor)). Among the circular
    runs of zero coefficients long enough for it, the offset is the start whose
    run has the smallest q-orbit closure (largest code), least start on ties. An
    axis whose factor has no zero coefficient is left out.
    """
    gamma, delta, offs = [], [], []
    for k, f in enumerate((A, Bp), start=1):
        nz = f.support()
        r = len(nz)
        if nz.all():
            continue
        d = apparent_1var(f)
        run = d - 1
        starts = [b for b in range(r) if not any(nz[(b + l) % r] for l in range(run))]

        def closure_size(b, r=r, run=run, q=f.ctx.q):
            return len({x for l in range(run) for x in cyclotomic_coset(b + l, q, r)})

        start = min(starts, key=lambda b: (closure_size(b), b))
        gamma.append(k)
        delta.append(d)
        offs.append(start)
    return BchSpec(tuple(gamma), tuple(delta), tuple(offs))


def product_apparent_check(C: AbelianCode, B=None) -> tuple[int, int, int]:
    """(Delta of C, Delta of C_1, Delta of C_2) for a CP afforded matrix, checking the product rule."""
    M = afforded(C.defining_set)
    proj = is_cp_matrix(M)
    if proj is None:
        raise ValueError("the afforded matrix is not a CP-matrix")
    if M.is_zero():
        return 0, 0, 0
    vals = []
    for S, r in zip(proj, C.dims):
        v = np.zeros(r, dtype=bool)
        v[list(S)] = True
        vals.append(vec_apparent(v, B))
    whole = code_apparent_at(C, None, B)
    direct = apparent_value(M, B)
    if whole != vals[0] * vals[1] or whole != direct:
        raise ArithmeticError(f"product rule failed: {whole} vs {vals[0]}*{vals[1]}, Delta(M)={direct}")
    return whole, vals[0], vals[1]
