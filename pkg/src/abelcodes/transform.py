"""The algebra L(r_1,...,r_s), its discrete Fourier transform, and univariate helpers.

A :class:`MultiPoly` keeps a dense integer array of encoded field elements
indexed by I.  The transform is evaluated directly from root-power tables,
one axis at a time; there is no fast transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gfield import FieldCtx, FieldElement, FieldError, _check_ctx


@dataclass(frozen=True, eq=False)
class MultiPoly:
    ctx: FieldCtx
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(self.coeffs.shape)

    @property
    def s(self) -> int:
        return self.coeffs.ndim

    def support(self) -> np.ndarray:
        return self.coeffs != 0

    def support_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in a) for a in np.argwhere(self.coeffs)}

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __getitem__(self, idx) -> FieldElement:
        return FieldElement(self.ctx, int(self.coeffs[idx]))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.dims == other.dims and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.dims, self.coeffs.tobytes()))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        _compatible(self, other)
        return MultiPoly(self.ctx, self.ctx.add_arr(self.coeffs, other.coeffs))

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        _compatible(self, other)
        return MultiPoly(self.ctx, self.ctx.add_arr(self.coeffs, self.ctx.neg_arr(other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return mul(self, other)
        if isinstance(other, FieldElement):
            _check_ctx(self.ctx, other.ctx)
            return MultiPoly(self.ctx, self.ctx.mul_arr(self.coeffs, other.value))
        return NotImplemented

    def star(self, other: "MultiPoly") -> "MultiPoly":
        """Coordinatewise product (the multiplication of L^|I|)."""
        _compatible(self, other)
        return MultiPoly(self.ctx, self.ctx.mul_arr(self.coeffs, other.coeffs))

    def shift(self, h) -> "MultiPoly":
        """Multiply by the monomial X^h (reduced)."""
        h = (h,) if isinstance(h, int) else tuple(h)
        return MultiPoly(self.ctx, np.roll(self.coeffs, h, axis=tuple(range(self.s))))

    def has_base_coeffs(self) -> bool:
        c = self.coeffs
        return bool(np.array_equal(self.ctx.pow_arr(c, self.ctx.q), c))

    def __repr__(self):
        terms = [f"{v}*X^{tuple(int(x) for x in i)}" for i, v in zip(np.argwhere(self.coeffs), self.coeffs[self.coeffs != 0])]
        return f"MultiPoly(dims={self.dims}, {' + '.join(terms) or '0'})"


def _compatible(f: MultiPoly, g: MultiPoly) -> None:
    _check_ctx(f.ctx, g.ctx)
    if f.dims != g.dims:
        raise ValueError(f"dims differ: {f.dims} vs {g.dims}")


def zeros(ctx: FieldCtx, dims) -> MultiPoly:
    return MultiPoly(ctx, np.zeros(tuple(dims), dtype=np.int64))


def constant(ctx: FieldCtx, dims, value: int = 1) -> MultiPoly:
    c = np.zeros(tuple(dims), dtype=np.int64)
    c[(0,) * len(c.shape)] = value
    return MultiPoly(ctx, c)


def from_terms(ctx: FieldCtx, dims, terms) -> MultiPoly:
    """Build a polynomial from {exponent tuple (or int): encoded value} or an iterable of exponents.

    Exponents are reduced modulo the lengths; repeated exponents are summed.
    """
    dims = tuple(dims)
    c = np.zeros(dims, dtype=np.int64)
    items = terms.items() if isinstance(terms, dict) else ((t, 1) for t in terms)
    for e, v in items:
        e = (e,) if isinstance(e, int) else tuple(e)
        idx = tuple(x % r for x, r in zip(e, dims))
        c[idx] = ctx.add(int(c[idx]), v)
    return MultiPoly(ctx, c)


def from_pattern(ctx: FieldCtx, mask: np.ndarray) -> MultiPoly:
    """0/1 polynomial with ones on the True entries of mask."""
    return MultiPoly(ctx, np.asarray(mask, dtype=np.int64) != 0)


def outer(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """a(X_1) b(X_2) for univariate a, b."""
    _check_ctx(a.ctx, b.ctx)
    if a.s != 1 or b.s != 1:
        raise ValueError("outer product takes two univariate polynomials")
    return MultiPoly(a.ctx, a.ctx.mul_arr(a.coeffs[:, None], b.coeffs[None, :]))


def _check_roots(ctx: FieldCtx, dims, roots) -> tuple[int, ...]:
    roots = tuple(roots)
    if len(roots) != len(dims):
        raise ValueError("one root per variable is required")
    vals = []
    for a, r in zip(roots, dims):
        _check_ctx(ctx, a.ctx)
        if a.value == 0 or ctx.element_order(a.value) != r:
            raise FieldError(f"root {a.value} does not have order {r}")
        vals.append(a.value)
    return tuple(vals)


def _power_table(ctx: FieldCtx, root: int, r: int, sign: int) -> np.ndarray:
    # W[j, i] = root^(sign * i * j)
    ij = np.outer(np.arange(r), np.arange(r)) * sign
    return np.array([[ctx.pow(root, int(e)) for e in row] for row in ij], dtype=np.int64)


def _apply_axis(ctx: FieldCtx, c: np.ndarray, W: np.ndarray, axis: int) -> np.ndarray:
    c = np.moveaxis(c, axis, 0)
    # out[j, ...] = sum_i W[j, i] * c[i, ...]
    prod = ctx.mul_arr(W.reshape(W.shape + (1,) * (c.ndim - 1)), c[None, ...])
    out = ctx.sum_arr(prod, axis=1)
    return np.moveaxis(out, 0, axis)


def _transform(f: MultiPoly, roots, sign: int) -> np.ndarray:
    ctx = f.ctx
    vals = _check_roots(ctx, f.dims, roots)
    c = f.coeffs
    for axis, (root, r) in enumerate(zip(vals, f.dims)):
        c = _apply_axis(ctx, c, _power_table(ctx, root, r, sign), axis)
    return c


def dft(f: MultiPoly, roots) -> MultiPoly:
    """phi(X) = sum_j f(alpha^j) X^j."""
    return MultiPoly(f.ctx, _transform(f, roots, 1))


def idft(g: MultiPoly, roots) -> MultiPoly:
    """Inverse transform: (1/prod r_k) sum_j g(alpha^-j) X^j."""
    ctx = g.ctx
    n = math.prod(g.dims)
    scale = ctx.inv(ctx.from_int(n))
    return MultiPoly(ctx, ctx.mul_arr(_transform(g, roots, -1), scale))


def evaluate(f: MultiPoly, point) -> FieldElement:
    """f(point) as an element of L."""
    ctx = f.ctx
    point = tuple(point)
    if len(point) != f.s:
        raise ValueError("point has the wrong number of coordinates")
    c = f.coeffs
    for axis, (x, r) in enumerate(zip(point, f.dims)):
        _check_ctx(ctx, x.ctx)
        w = np.array([ctx.pow(x.value, i) for i in range(r)], dtype=np.int64)
        c = ctx.sum_arr(ctx.mul_arr(w.reshape((r,) + (1,) * (c.ndim - 1)), c), axis=0)
    return FieldElement(ctx, int(c))


def nonzero_root_count(f: MultiPoly, roots) -> int:
    """|Z-bar(f)|: the number of points of R where f does not vanish."""
    return idft(f, roots).weight()


def mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Product in L(r_1,...,r_s) (cyclic convolution)."""
    _compatible(f, g)
    ctx, dims = f.ctx, f.dims
    out = np.zeros(dims, dtype=np.int64)
    for idx in np.argwhere(f.coeffs):
        idx = tuple(int(x) for x in idx)
        term = ctx.mul_arr(g.coeffs, int(f.coeffs[idx]))
        out = ctx.add_arr(out, np.roll(term, idx, axis=tuple(range(len(dims)))))
    return MultiPoly(ctx, out)


# --- univariate polynomials over L as genuine polynomials ----------------------
# Coefficient lists, constant term first, no trailing zeros.


def _trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def lift(f: MultiPoly) -> list[int]:
    """Degree < r representative of a univariate residue."""
    if f.s != 1:
        raise ValueError("univariate polynomial expected")
    return _trim(int(x) for x in f.coeffs)


def poly_mul(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
    return _trim(out)


def poly_divmod(ctx: FieldCtx, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim(a)
    inv = ctx.inv(b[-1])
    quot = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = ctx.mul(r[-1], inv)
        k = len(r) - len(b)
        quot[k] = c
        for i, bc in enumerate(b):
            r[k + i] = ctx.sub(r[k + i], ctx.mul(c, bc))
        r = _trim(r)
    return _trim(quot), r


def poly_monic(ctx: FieldCtx, a: list[int]) -> list[int]:
    a = _trim(a)
    if not a:
        return a
    inv = ctx.inv(a[-1])
    return [ctx.mul(x, inv) for x in a]


def poly_gcd(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(ctx, a, b)[1]
    return poly_monic(ctx, a)


def x_power_minus_one(ctx: FieldCtx, r: int) -> list[int]:
    out = [0] * (r + 1)
    out[0] = ctx.neg(1)
    out[r] = 1
    if r == 0:
        return []
    return out


def _as_univariate(ctx: FieldCtx, coeffs: list[int], r: int) -> MultiPoly:
    c = np.zeros(r, dtype=np.int64)
    for i, x in enumerate(coeffs):
        c[i % r] = ctx.add(int(c[i % r]), x)
    return MultiPoly(ctx, c)


def _operands(f, g):
    polys = [x for x in (f, g) if isinstance(x, MultiPoly)]
    if not polys:
        raise TypeError("at least one operand must be a MultiPoly")
    if len(polys) == 2:
        _compatible(f, g)
    base = polys[0]
    if base.s != 1:
        raise ValueError("univariate polynomial expected")
    conv = lambda x: lift(x) if isinstance(x, MultiPoly) else _trim(int(c) for c in x)
    return base, conv(f), conv(g)


def gcd_1var(f, g) -> MultiPoly:
    """Monic gcd of two univariate polynomials.

    MultiPoly arguments are lifted to their degree < r representatives; plain
    coefficient lists (constant term first) are taken as genuine polynomials,
    which is how X^r - 1 is passed.
    """
    base, a, b = _operands(f, g)
    return _as_univariate(base.ctx, poly_gcd(base.ctx, a, b), base.dims[0])


def divides_1var(f, g) -> bool:
    """Whether f divides g as genuine polynomials (arguments as in gcd_1var)."""
    base, a, b = _operands(f, g)
    if not a:
        return not b
    return not poly_divmod(base.ctx, b, a)[1]


def divides_xr_minus_one(f: MultiPoly) -> bool:
    """Whether the lift of f divides X^r - 1."""
    a = lift(f)
    if not a:
        return False
    return not poly_divmod(f.ctx, x_power_minus_one(f.ctx, f.dims[0]), a)[1]
