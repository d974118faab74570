"""Ground truth for small codes: generator bases and exhaustive minimum distance.

The basis is built orbit by orbit from field traces, so it never touches the
apparent-distance machinery; that independence is the point of this module.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codes import AbelianCode, dimension
from .transform import MultiPoly

DEFAULT_CAP_BINARY = 22
DEFAULT_WORK_LOG2 = 22
LOW_BITS = 16


@dataclass(frozen=True)
class GeneratorBasis:
    """Basis codewords as MultiPolys plus their F_q index vectors (flattened, C order)."""

    code: AbelianCode
    polys: tuple[MultiPoly, ...]
    vectors: np.ndarray  # shape (k, n), entries are indices into base_elements
    base_elements: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.polys)


def _trace(ctx, x: np.ndarray, s: int) -> np.ndarray:
    """Trace from GF(q^s) down to F_q, elementwise."""
    acc = np.zeros_like(x)
    y = x
    for _ in range(s):
        acc = ctx.add_arr(acc, y)
        y = ctx.pow_arr(y, ctx.q)
    return acc


def generator_basis(C: AbelianCode) -> GeneratorBasis:
    """F_q-basis of the code: for each nonzero orbit O with representative i and each
    lambda in a basis of GF(q^|O|), the word c_j = Tr(lambda * alpha^(-i.j)).
    """
    ctx, dims = C.ctx, C.dims
    roots = C.root_elements()
    idx = np.indices(dims)
    polys = []
    for orb in C.defining_set.complement().orbits():
        i = orb.reps()[0]
        size = len(orb)
        # alpha^(-i.j) over the whole index box
        x = np.ones(dims, dtype=np.int64)
        for k, (a, r) in enumerate(zip(roots, dims)):
            e = (-i[k] * idx[k]) % r
            x = ctx.mul_arr(x, _pow_table(ctx, a.value, r)[e])
        gamma = ctx.gen_pow(ctx.order // (ctx.q**size - 1))
        lam = 1
        for _ in range(size):
            polys.append(MultiPoly(ctx, _trace(ctx, ctx.mul_arr(x, lam), size)))
            lam = ctx.mul(lam, gamma)
    base = tuple(ctx.base_field_elements())
    lookup = {v: n for n, v in enumerate(base)}
    vecs = np.array([[lookup[int(v)] for v in p.coeffs.ravel()] for p in polys], dtype=np.int64)
    vecs = vecs.reshape(len(polys), math.prod(dims))
    return GeneratorBasis(C, tuple(polys), vecs, base)


def _pow_table(ctx, a: int, r: int) -> np.ndarray:
    return np.array([ctx.pow(a, e) for e in range(r)], dtype=np.int64)


def _fq_tables(q: int, base, ctx):
    add = np.array([[base.index(ctx.add(x, y)) for y in base] for x in base], dtype=np.int64)
    mul = np.array([[base.index(ctx.mul(x, y)) for y in base] for x in base], dtype=np.int64)
    return add, mul


def fq_rank(vectors: np.ndarray, q: int, add: np.ndarray, mul: np.ndarray) -> int:
    """Rank over F_q of index vectors (Gaussian elimination with the given tables)."""
    A = np.array(vectors, dtype=np.int64, copy=True)
    if A.size == 0:
        return 0
    inv = {x: y for x in range(1, q) for y in range(1, q) if mul[x, y] == 1}
    neg = {x: y for x in range(q) for y in range(q) if add[x, y] == 0}
    rank, rows, cols = 0, A.shape[0], A.shape[1]
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r, c]), None)
        if piv is None:
            continue
        A[[rank, piv]] = A[[piv, rank]]
        A[rank] = mul[inv[int(A[rank, c])], A[rank]]
        for r in range(rows):
            if r != rank and A[r, c]:
                f = neg[int(A[r, c])]
                A[r] = add[A[r], mul[f, A[rank]]]
        rank += 1
        if rank == rows:
            break
    return rank


def _default_threads() -> int:
    env = os.environ.get("ABELCODES_THREADS")
    if env:
        return max(1, int(env))
    return max(1, min(8, os.cpu_count() or 1))


def _check_cap(q: int, k: int, cap_k: int | None) -> None:
    if cap_k is not None:
        if k > cap_k:
            raise ValueError(f"dimension k={k} exceeds the cap {cap_k}")
        return
    if q == 2:
        if k > DEFAULT_CAP_BINARY:
            raise ValueError(f"dimension k={k} exceeds the cap {DEFAULT_CAP_BINARY}")
    elif k * math.log2(q) > DEFAULT_WORK_LOG2 + 1e-9:
        raise ValueError(f"q^k = {q}^{k} codewords exceeds the cap 2^{DEFAULT_WORK_LOG2}")


def _pack_bits(vectors: np.ndarray) -> np.ndarray:
    """(k, n) 0/1 rows -> (k, words) uint64."""
    k, n = vectors.shape
    words = (n + 63) // 64
    padded = np.zeros((k, words * 64), dtype=np.uint8)
    padded[:, :n] = vectors
    bits = np.packbits(padded.reshape(k, words, 64)[:, :, ::-1], axis=2)
    return bits.view(">u8").reshape(k, words).astype(np.uint64)


def _binary_table(rows: np.ndarray) -> np.ndarray:
    """All XOR combinations of the packed rows, index bit b selecting row b."""
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ r], axis=0)
    return table


def _general_table(rows: np.ndarray, q: int, add, mul) -> np.ndarray:
    table = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for r in rows:
        parts = [table] + [add[table, mul[a, r][None, :]] for a in range(1, q)]
        table = np.concatenate(parts, axis=0)
    return table


def _enumerate(basis: GeneratorBasis, threads: int | None, reducer):
    """Apply reducer(weights_of_chunk) to every chunk of codewords; returns the list of results."""
    q = basis.code.q
    V = basis.vectors
    k = V.shape[0]
    low = min(k, LOW_BITS if q == 2 else max(1, int(LOW_BITS / math.log2(q))))
    high = k - low
    threads = threads or _default_threads()
    if q == 2:
        packed = _pack_bits(V)
        table = _binary_table(packed[:low])
        high_rows = packed[low:]

        def work(lo_hi):
            out = []
            for m in range(*lo_hi):
                h = np.zeros(packed.shape[1], dtype=np.uint64)
                for b in range(high):
                    if m >> b & 1:
                        h ^= high_rows[b]
                w = np.bitwise_count(table ^ h).sum(axis=1, dtype=np.int64)
                out.append(reducer(w))
            return out

        total = 1 << high
    else:
        base = list(basis.base_elements)
        add, mul = _fq_tables(q, base, basis.code.ctx)
        table = _general_table(V[:low], q, add, mul)
        high_rows = V[low:]

        def work(lo_hi):
            out = []
            for m in range(*lo_hi):
                h = np.zeros(V.shape[1], dtype=np.int64)
                x = m
                for b in range(high):
                    x, a = divmod(x, q)
                    if a:
                        h = add[h, mul[a, high_rows[b]]]
                w = np.count_nonzero(add[table, h[None, :]], axis=1)
                out.append(reducer(w))
            return out

        total = q**high
    step = max(1, -(-total // (threads * 4)))
    ranges = [(s, min(total, s + step)) for s in range(0, total, step)]
    if threads == 1 or len(ranges) == 1:
        results = [work(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(work, ranges))
    return [x for chunk in results for x in chunk]


def min_distance_bruteforce(C: AbelianCode, cap_k: int | None = None, threads: int | None = None,
                            basis: GeneratorBasis | None = None) -> int:
    """Exact minimum distance by enumerating every nonzero codeword."""
    k = dimension(C)
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    _check_cap(C.q, k, cap_k)
    basis = basis or generator_basis(C)

    def reducer(w):
        w = w.copy()
        return int(w[w > 0].min()) if (w > 0).any() else math.inf

    return int(min(_enumerate(basis, threads, reducer)))


def weight_distribution(C: AbelianCode, cap_k: int | None = None, threads: int | None = None,
                        basis: GeneratorBasis | None = None) -> np.ndarray:
    """A[w] = number of codewords of weight w, zero word included."""
    k = dimension(C)
    _check_cap(C.q, k, cap_k)
    basis = basis or generator_basis(C)
    n = C.length
    if k == 0:
        out = np.zeros(n + 1, dtype=np.int64)
        out[0] = 1
        return out
    parts = _enumerate(basis, threads, lambda w: np.bincount(w, minlength=n + 1))
    return np.sum(parts, axis=0)


def weight_upper_bound(C: AbelianCode, trials: int = 1000, seed: int = 0,
                       basis: GeneratorBasis | None = None) -> int | None:
    """Least weight among random nonzero codewords; None for the zero code."""
    if dimension(C) == 0:
        return None
    basis = basis or generator_basis(C)
    q = C.q
    rng = np.random.default_rng(seed)
    V = basis.vectors
    add, mul = _fq_tables(q, list(basis.base_elements), C.ctx)
    best = min(int(np.count_nonzero(v)) for v in V)
    for _ in range(trials):
        coef = rng.integers(0, q, size=V.shape[0])
        if not coef.any():
            continue
        acc = np.zeros(V.shape[1], dtype=np.int64)
        for a, row in zip(coef, V):
            if a:
                acc = add[acc, mul[a, row]]
        w = int(np.count_nonzero(acc))
        if w:
            best = min(best, w)
    return best
