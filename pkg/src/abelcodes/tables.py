"""Regeneration of the four reference tables of constructed codes.

Inputs (the divisors and shifts) are transcribed below; dimensions and
distances are always recomputed and then compared with the expected values.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .codes import AbelianCode, RootSelection, code_apparent_at, dimension
from .construct import (
    bch_defining_set,
    bch_spec_from_factors,
    certify_with_witness,
    construct_true_distance_code,
    rational_exponents,
)
from .gfield import make_context
from .transform import MultiPoly, _as_univariate, lift, poly_divmod, poly_mul, x_power_minus_one

# binary polynomials as exponent lists
A1 = [0, 1]
A2 = [0, 1, 3]
A3 = [0, 2, 3]
PHI5 = [0, 1, 2, 3, 4]
DIV15 = {"b1": [0, 1, 2], "b2": [0, 1, 4], "b3": [0, 3, 4]}
DIV21 = {"b'1": [0, 1, 2], "b'2": [0, 1, 3], "b'3": [0, 2, 3], "b'4": [0, 1, 2, 4, 6], "b'5": [0, 2, 4, 5, 6]}

# (a name, h1, b name, h2, expected dimension, expected distance)
TABLE1 = [
    ("a2", 1, "b1", 1, 30, 8), ("a2", 1, "b2", 1, 24, 16), ("a2", 1, "b3", 3, 24, 16),
    ("a3", 3, "b1", 1, 30, 8), ("a3", 3, "b2", 1, 24, 16), ("a3", 3, "b3", 3, 24, 16),
    ("a1a3", 0, "b1", 1, 40, 6), ("a1a3", 0, "b2", 1, 32, 12), ("a1a3", 0, "b3", 3, 32, 12),
    ("a2a3", 0, "b1", 1, 70, 2), ("a2a3", 0, "b2", 1, 56, 4), ("a2a3", 0, "b3", 3, 56, 4),
]
TABLE2 = [
    ("phi5", 0, "b'1", 1, 70, 2), ("phi5", 0, "b'2", 1, 60, 3), ("phi5", 0, "b'3", 3, 60, 3),
    ("phi5", 0, "b'4", 1, 40, 6), ("phi5", 0, "b'5", 1, 40, 6),
]
# (gamma, offsets, expected dimension, expected distance); rows follow the order of TABLE1 / TABLE2
TABLE3 = [
    ((1, 2), (5, 0), 42, 8), ((1, 2), (5, 13), 40, 16), ((1, 2), (5, 0), 40, 16),
    ((1, 2), (0, 0), 42, 8), ((1, 2), (0, 13), 40, 16), ((1, 2), (0, 0), 40, 16),
    ((1, 2), (5, 0), 56, 6), ((1, 2), (5, 13), 40, 12), ((1, 2), (5, 0), 40, 12),
    ((2,), (0,), 98, 2), ((2,), (13,), 70, 4), ((2,), (0,), 70, 4),
]
TABLE4 = [
    ((2,), (0,), 100, 2), ((2,), (19,), 75, 3), ((2,), (1,), 75, 3), ((2,), (17,), 55, 6), ((2,), (0,), 55, 6),
]

CSV_COLUMNS = {
    1: ["a", "h1", "b", "h2", "h1_used", "h2_used", "dimension", "delta", "d_certified"],
    3: ["gamma", "offsets", "dimension", "delta", "d_certified"],
}
CSV_COLUMNS[2] = CSV_COLUMNS[1]
CSV_COLUMNS[4] = CSV_COLUMNS[3]


def _poly(ctx, exps, r) -> MultiPoly:
    c = [0] * (max(exps) + 1)
    for e in exps:
        c[e] ^= 1
    return _as_univariate(ctx, c, r)


def _complement_divisor(ctx, exps, r) -> MultiPoly:
    p = [0] * (max(exps) + 1)
    for e in exps:
        p[e] = 1
    quo, rem = poly_divmod(ctx, x_power_minus_one(ctx, r), p)
    if rem:
        raise ValueError(f"{exps} does not divide X^{r} - 1")
    return _as_univariate(ctx, quo, r)


def _product(ctx, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    return _as_univariate(ctx, poly_mul(ctx, lift(f), lift(g)), f.dims[0])


def table_inputs(which: int):
    """Field context and the named univariate factors for a table family."""
    if which in (1, 3):
        ctx = make_context(2, 1, (7, 15))
        a = {"a1": _poly(ctx, A1, 7), "a2": _poly(ctx, A2, 7), "a3": _poly(ctx, A3, 7)}
        a["a1a3"] = _product(ctx, a["a1"], a["a3"])
        a["a2a3"] = _product(ctx, a["a2"], a["a3"])
        b = {k: _complement_divisor(ctx, v, 15) for k, v in DIV15.items()}
    elif which in (2, 4):
        ctx = make_context(2, 1, (5, 21))
        a = {"phi5": _poly(ctx, PHI5, 5)}
        b = {k: _complement_divisor(ctx, v, 21) for k, v in DIV21.items()}
    else:
        raise ValueError(f"no table {which}; choose 1, 2, 3 or 4")
    return ctx, a, b


@dataclass
class TableRow:
    inputs: dict
    dimension: int
    delta: int
    d_certified: int | None
    expected: tuple[int, int]

    @property
    def ok(self) -> bool:
        return not self.mismatches()

    def mismatches(self) -> list[str]:
        out = []
        for key in ("gamma", "offsets"):
            want = self.inputs.get("expected_" + key)
            if want is not None and self.inputs[key] != want:
                out.append(f"{key} {self.inputs[key]} != {want}")
        if self.dimension != self.expected[0]:
            out.append(f"dimension {self.dimension} != {self.expected[0]}")
        if self.delta != self.expected[1]:
            out.append(f"delta {self.delta} != {self.expected[1]}")
        if self.d_certified != self.delta:
            out.append(f"certified d {self.d_certified} != delta {self.delta}")
        return out

    def to_dict(self) -> dict:
        return {**self.inputs, "dimension": self.dimension, "delta": self.delta, "d_certified": self.d_certified,
                "expected_dimension": self.expected[0], "expected_delta": self.expected[1], "ok": self.ok}


def rational_shift_near(f: MultiPoly, h: int) -> tuple[int, list[int]]:
    """The listed shift if some root makes X^h f rational, else the least shift that does.

    Dimension and distance of the construction do not depend on the shift, only
    whether the generator has coefficients in F_q does.
    """
    r = f.dims[0]
    for cand in [h % r] + [x for x in range(r) if x != h % r]:
        us = rational_exponents(f, cand)
        if us:
            return cand, us
    raise ValueError("no shift makes the factor rational")


def _roots_for(a: MultiPoly, h1: int, b: MultiPoly, h2: int):
    h1, u1 = rational_shift_near(a, h1)
    h2, u2 = rational_shift_near(b, h2)
    return RootSelection((u1[0], u2[0])), h1, h2


def build_row(which: int, index: int, ctx=None, factors=None):
    """(Construction, BCH code or None) for one row; BCH tables reuse the matching construction row."""
    if ctx is None:
        ctx, a_map, b_map = table_inputs(which)
    else:
        a_map, b_map = factors
    base = TABLE1 if which in (1, 3) else TABLE2
    an, h1, bn, h2, _, _ = base[index]
    a, b = a_map[an], b_map[bn]
    roots, h1, h2 = _roots_for(a, h1, b, h2)
    con = construct_true_distance_code(a, b, roots, h1, h2, ctx)
    if which in (1, 2):
        return con, None
    spec = bch_spec_from_factors(a.shift(h1), b.shift(h2))
    bch = AbelianCode(ctx, bch_defining_set(spec, ctx.q, ctx.lengths), roots)
    return con, (spec, bch)


def regenerate(which: int) -> list[TableRow]:
    ctx, a_map, b_map = table_inputs(which)
    rows = []
    expected = {1: TABLE1, 2: TABLE2, 3: TABLE3, 4: TABLE4}[which]
    for i, exp in enumerate(expected):
        con, bch = build_row(which, i, ctx, (a_map, b_map))
        if bch is None:
            an, h1, bn, h2, dim, dd = exp
            rows.append(TableRow({"a": an, "h1": h1, "b": bn, "h2": h2,
                                  "h1_used": con.shifts[0], "h2_used": con.shifts[1]},
                                 dimension(con.code), con.guaranteed_d,
                                 con.guaranteed_d if con.witness.weight() == con.bmad else None, (dim, dd)))
        else:
            spec, code = bch
            gamma, offs, dim, dd = exp
            delta = code_apparent_at(code)
            cert = certify_with_witness(code, con.witness)
            rows.append(TableRow({"gamma": list(spec.gamma), "offsets": list(spec.offsets),
                                  "delta_designed": list(spec.delta),
                                  "expected_gamma": list(gamma), "expected_offsets": list(offs)},
                                 dimension(code), delta, cert, (dim, dd)))
    return rows


def timed_regenerate(which: int) -> tuple[list[TableRow], float]:
    t = time.perf_counter()
    rows = regenerate(which)
    return rows, time.perf_counter() - t
