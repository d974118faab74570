"""JSON encodings for orbit sets, polynomials, support matrices and codes.

Formats (all plain JSON objects):

* orbit set  ``{"dims": [...], "q": q, "reps": [[...], ...]}``
* polynomial ``{"dims": [...], "coeffs": [[i_1, ..., i_s, value], ...]}``, values as
  field integers of the deterministic context
* support    ``{"dims": [...], "q": q, "reps": [...]}`` (nonzero orbits) or
  ``{"pattern": [[0, 1, ...], ...], "q": q}``
* code       ``{"p": p, "m": m, "dims": [...], "defining_reps": [...], "roots": [...]}``
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .apparent import SupportHypermatrix, from_orbit_reps
from .codes import AbelianCode, code_from_dict
from .gfield import FieldCtx
from .orbits import OrbitSet
from .transform import MultiPoly, from_terms


def orbitset_to_dict(S: OrbitSet) -> dict:
    return {"dims": list(S.dims), "q": S.q, "reps": [list(a) for a in S.reps()]}


def orbitset_from_dict(d: dict) -> OrbitSet:
    return OrbitSet.from_reps([tuple(a) for a in d["reps"]], d["q"], tuple(d["dims"]))


def poly_to_dict(f: MultiPoly) -> dict:
    idx = np.argwhere(f.coeffs != 0)
    return {"dims": list(f.dims), "coeffs": [[*map(int, i), int(f.coeffs[tuple(i)])] for i in idx]}


def poly_from_dict(ctx: FieldCtx, d: dict) -> MultiPoly:
    dims = tuple(d["dims"])
    terms = {}
    for entry in d["coeffs"]:
        *i, v = entry
        if len(i) != len(dims):
            raise ValueError(f"coefficient index {i} does not match dims {dims}")
        key = tuple(int(x) % r for x, r in zip(i, dims))
        terms[key] = ctx.add(terms.get(key, 0), int(v))
    return from_terms(ctx, dims, terms)


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:X(?:\^(\d+))?)?$")


def parse_univariate(ctx: FieldCtx, text: str, r: int) -> MultiPoly:
    """Parse ``1+X+X^3``, ``2*X^4+1`` or an exponent list ``0,1,3`` into F_q[X]/(X^r - 1).

    Integer coefficients are reduced into the prime field.
    """
    text = text.replace(" ", "")
    terms: dict[tuple[int], int] = {}
    if re.fullmatch(r"\d+(,\d+)+", text):
        for e in text.split(","):
            key = (int(e) % r,)
            terms[key] = ctx.add(terms.get(key, 0), 1)
        return from_terms(ctx, (r,), terms)
    for raw in text.replace("-", "+-").split("+"):
        if not raw:
            continue
        neg = raw.startswith("-")
        raw = raw.lstrip("-").replace("Y", "X").replace("x", "X")
        m = _TERM.match(raw)
        if not m or not raw:
            raise ValueError(f"cannot parse polynomial term {raw!r}")
        coef, exp = m.group(1), m.group(2)
        c = int(coef) if coef is not None else 1
        e = int(exp) if exp is not None else (1 if "X" in raw else 0)
        v = ctx.from_int(c % ctx.p)
        if neg:
            v = ctx.neg(v)
        key = (e % r,)
        terms[key] = ctx.add(terms.get(key, 0), v)
    return from_terms(ctx, (r,), terms)


def support_from_dict(d: dict) -> SupportHypermatrix:
    if "pattern" in d:
        return SupportHypermatrix(np.array(d["pattern"], dtype=bool), d.get("q"))
    return from_orbit_reps([tuple(a) for a in d["reps"]], d["q"], tuple(d["dims"]))


def support_to_dict(M: SupportHypermatrix) -> dict:
    return {"dims": list(M.dims), "q": M.q, "reps": [list(a) for a in M.orbit_reps()]}


def code_to_dict(C: AbelianCode) -> dict:
    return C.to_dict()


def load_json(source: str) -> dict:
    """Read a JSON object from a path, or from the text itself when it starts with '{'."""
    s = source.strip()
    if s.startswith("{"):
        return json.loads(s)
    return json.loads(Path(source).read_text())


def load_code(source: str, ctx: FieldCtx | None = None) -> AbelianCode:
    return code_from_dict(load_json(source), ctx)
