"""Exact arithmetic in F_q (q = p^m) and in an extension L holding all needed roots of unity.

Elements of L are stored as integers: the base-p digits of the integer are the
coefficients (constant term first) of a polynomial over F_p reduced modulo the
context's irreducible modulus.  Vectorised operations on integer arrays are
provided through the context so the transform code can work on whole
hypermatrices at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

# above this size no log/exp tables are built and arithmetic goes digit by digit
TABLE_LIMIT = 1 << 20
MAX_FIELD = 1 << 32


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def multiplicative_order(q: int, r: int) -> int:
    """Least t >= 1 with q^t = 1 mod r (r coprime to q)."""
    if r == 1:
        return 1
    if math.gcd(q, r) != 1:
        raise FieldError(f"{q} is not invertible modulo {r}")
    t, x = 1, q % r
    while x != 1:
        x = (x * q) % r
        t += 1
    return t


# --- polynomials over F_p as coefficient lists (constant term first) -------------


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(_fp_trim(a)) - 1 >= dm:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
    return a


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_mod(out, m, p)


def _fp_powmod(a, e, m, p):
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _fp_trim(out)


def is_irreducible_fp(f: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for r in prime_factors(n):
        h = _fp_sub(_fp_powmod(x, p ** (n // r), f, p), x, p)
        g = _fp_gcd(f, h, p)
        if len(g) - 1 > 0:
            return False
    return not _fp_sub(_fp_powmod(x, p**n, f, p), x, p)


def least_irreducible(p: int, degree: int) -> list[int]:
    """Lexicographically least monic irreducible polynomial of the given degree.

    Candidates are ordered by the integer whose base-p digits are the
    coefficients (constant term least significant).
    """
    for low in range(p**degree):
        coeffs = [(low // p**i) % p for i in range(degree)] + [1]
        if degree > 1 and coeffs[0] == 0:
            continue
        if is_irreducible_fp(coeffs, p):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {degree} over F_{p}")  # pragma: no cover


def _int_to_digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _digits_to_int(d, p: int) -> int:
    return reduce(lambda acc, c: acc * p + c, reversed(list(d)), 0)


# --- the context ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Arithmetic context for L = GF(p^(m t)) with base field F_q, q = p^m.

    Construct it with :func:`make_context`.  Instances are immutable and are
    compared by identity: elements from different contexts never mix.
    """

    p: int
    m: int
    t: int
    lengths: tuple[int, ...]
    modulus: tuple[int, ...]
    generator: int
    _exp: np.ndarray | None = field(repr=False)
    _log: np.ndarray | None = field(repr=False)
    _digits: np.ndarray | None = field(repr=False)
    _powers: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def degree(self) -> int:
        return self.m * self.t

    @property
    def size(self) -> int:
        return self.p**self.degree

    @property
    def order(self) -> int:
        return self.size - 1

    def key(self) -> tuple:
        return (self.p, self.m, self.lengths)

    # scalar arithmetic on encoded ints

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._digits is not None:
            return int(self._from_digits((self._digits[a] + self._digits[b]) % self.p))
        k = self.degree
        da, db = _int_to_digits(a, self.p, k), _int_to_digits(b, self.p, k)
        return _digits_to_int([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        d = _int_to_digits(a, self.p, self.degree)
        return _digits_to_int([(-x) % self.p for x in d], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) + int(self._log[b])) % self.order])
        k = self.degree
        r = _fp_mulmod(_int_to_digits(a, self.p, k), _int_to_digits(b, self.p, k), list(self.modulus), self.p)
        return _digits_to_int(r + [0] * (k - len(r)), self.p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        if self._log is not None:
            return int(self._exp[(-int(self._log[a])) % self.order])
        return self.pow(a, self.order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self._log is not None:
            return int(self._exp[(int(self._log[a]) * e) % self.order])
        e %= self.order
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def gen_pow(self, e: int) -> int:
        """generator ** e."""
        if self._exp is not None:
            return int(self._exp[e % self.order])
        return self.pow(self.generator, e)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> L."""
        return n % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.q)

    def in_base(self, a: int) -> bool:
        return self.frobenius(a) == a

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order
        for f in prime_factors(n):
            while n % f == 0 and self.pow(a, n // f) == 1:
                n //= f
        return n

    # vectorised arithmetic on integer arrays

    def _from_digits(self, d: np.ndarray) -> np.ndarray:
        return np.tensordot(d, self._powers, axes=([-1], [0]))

    def add_arr(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self._digits is not None:
            return self._from_digits((self._digits[a] + self._digits[b]) % self.p).astype(np.int64)
        return np.vectorize(self.add, otypes=[np.int64])(a, b)

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self._digits is not None:
            return self._from_digits((-self._digits[a]) % self.p).astype(np.int64)
        return np.vectorize(self.neg, otypes=[np.int64])(a)

    def mul_arr(self, a, b) -> np.ndarray:
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self._log is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[(self._log[a] + self._log[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, out).astype(np.int64)

    def pow_arr(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self._log is None:
            return np.vectorize(lambda x: self.pow(x, e), otypes=[np.int64])(a)
        out = self._exp[(self._log[a] * e) % self.order]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out).astype(np.int64)

    def sum_arr(self, a, axis: int = 0) -> np.ndarray:
        """Field sum of an integer array along one axis."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self._digits is not None:
            return self._from_digits(self._digits[a].sum(axis=axis) % self.p).astype(np.int64)
        a = np.moveaxis(a, axis, 0)
        acc = a[0]
        for row in a[1:]:
            acc = self.add_arr(acc, row)
        return acc

    def base_field_elements(self) -> list[int]:
        """The q elements of F_q inside L, ascending by encoding."""
        step = self.order // (self.q - 1)
        return sorted({0} | {self.gen_pow(step * k) for k in range(self.q - 1)})

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)


def make_context(p: int, m: int, lengths) -> FieldCtx:
    """Build the smallest extension of F_{p^m} containing every r-th root of unity.

    The extension degree is the lcm of the orders of q modulo each length.  The
    modulus is the least irreducible polynomial of degree m*t over F_p and the
    generator is the least primitive element, so equal inputs always produce
    identical contexts.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError("base degree must be positive")
    lengths = tuple(int(r) for r in lengths)
    q = p**m
    for r in lengths:
        if r < 1:
            raise FieldError(f"length {r} must be positive")
        if math.gcd(r, q) != 1:
            raise FieldError(f"length r={r} is divisible by the characteristic {p}; algebra is not semisimple")
    t = reduce(lambda x, y: x * y // math.gcd(x, y), (multiplicative_order(q, r) for r in lengths), 1)
    k = m * t
    size = p**k
    if size > MAX_FIELD:
        raise FieldError(f"extension field of size {p}^{k} exceeds the supported maximum 2^32")
    modulus = least_irreducible(p, k)
    order = size - 1
    powers = np.array([p**i for i in range(k)], dtype=np.int64)

    def mul(a, b):
        r = _fp_mulmod(_int_to_digits(a, p, k), _int_to_digits(b, p, k), modulus, p)
        return _digits_to_int(r + [0] * (k - len(r)), p)

    def is_primitive(x):
        for f in prime_factors(order):
            e, result, base = order // f, 1, x
            while e:
                if e & 1:
                    result = mul(result, base)
                base = mul(base, base)
                e >>= 1
            if result == 1:
                return False
        return True

    if order == 1:
        generator = 1
    else:
        generator = next(x for x in range(2, size) if is_primitive(x))

    exp = log = digits = None
    if size <= TABLE_LIMIT:
        exp = np.zeros(order, dtype=np.int64)
        log = np.zeros(size, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = mul(x, generator)
        if p != 2:
            ar = np.arange(size, dtype=np.int64)
            digits = np.stack([(ar // p**i) % p for i in range(k)], axis=-1)
    return FieldCtx(p, m, t, lengths, tuple(modulus), generator, exp, log, digits, powers)


def _check_ctx(a: FieldCtx, b: FieldCtx) -> None:
    if a is not b:
        raise FieldError("elements belong to different field contexts")


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            _check_ctx(self.ctx, other.ctx)
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        return FieldElement(self.ctx, self.ctx.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        return FieldElement(self.ctx, self.ctx.sub(self.value, v))

    def __rsub__(self, other):
        v = self._other(other)
        return FieldElement(self.ctx, self.ctx.sub(v, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        v = self._other(other)
        return FieldElement(self.ctx, self.ctx.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        return FieldElement(self.ctx, self.ctx.div(self.value, v))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.value))

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def order(self) -> int:
        return self.ctx.element_order(self.value)

    def __repr__(self):
        return f"FieldElement({self.value})"


def primitive_root(ctx: FieldCtx, r: int) -> FieldElement:
    """A fixed element of multiplicative order exactly r (a power of the generator)."""
    if r < 1 or ctx.order % r != 0:
        raise FieldError(f"{r} does not divide |L|-1 = {ctx.order}")
    return FieldElement(ctx, ctx.gen_pow(ctx.order // r))


def in_base_field(ctx: FieldCtx, x: FieldElement) -> bool:
    """True iff x lies in F_q, i.e. x^q = x."""
    _check_ctx(ctx, x.ctx)
    return ctx.in_base(x.value)


def minimal_polynomial(ctx: FieldCtx, x: FieldElement) -> list[FieldElement]:
    """Minimal polynomial of x over F_q, coefficients constant term first (monic)."""
    _check_ctx(ctx, x.ctx)
    conj, y = [], x.value
    while y not in conj:
        conj.append(y)
        y = ctx.frobenius(y)
    poly = [1]
    for c in conj:
        # multiply by (X - c)
        nc = ctx.neg(c)
        out = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            out[i + 1] = ctx.add(out[i + 1], a)
            out[i] = ctx.add(out[i], ctx.mul(a, nc))
        poly = out
    return [FieldElement(ctx, v) for v in poly]
