"""Command-line frontend: ``abelcodes <subcommand> [options]``.

Every successful run prints one record ``{"config": ..., "result": ...}`` (plus a
``timestamp`` unless suppressed). Failures print ``{"error": {...}}`` and exit
nonzero.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

from . import __version__
from .apparent import SupportHypermatrix, afforded, bmad, hyper_apparent
from .bounds import BUILTIN, bch_optimal, bound_set, bound_set_eval, ht_optimal, to_mask
from .codes import AbelianCode, RootSelection, code_apparent, code_apparent_at, dimension
from .construct import (
    BchSpec,
    ConstructionError,
    bch_defining_set,
    construct_true_distance_code,
    is_cp_matrix,
    rational_exponents,
    rational_shift,
    recognize_bivariate_bch,
    verify_true_distance,
)
from .gfield import FieldError, is_prime, make_context, prime_factors, primitive_root
from .oracle import min_distance_bruteforce, weight_upper_bound
from .orbits import q_orbit
from .serialize import load_code, load_json, orbitset_to_dict, parse_univariate, poly_to_dict, support_from_dict
from .tables import CSV_COLUMNS, timed_regenerate

THREADS_ENV = "ABELCODES_THREADS"
FORMATS = ("json", "csv", "text")


class CliError(Exception):
    """Invalid input detected by the frontend itself."""


@dataclass
class RunConfig:
    p: int | None = None
    m: int = 1
    dims: list[int] | None = None
    bounds: str = "bch"
    orbit_cap: int = 20
    cap_k: int | None = None
    threads: int | None = None
    format: str = "json"
    seed: int = 0
    timestamp: bool = True

    def validate(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise CliError(f"p={self.p} is not prime")
        if self.m < 1:
            raise CliError("m must be at least 1")
        if self.dims is not None:
            if not self.dims or any(r < 1 for r in self.dims):
                raise CliError(f"invalid dims {self.dims}")
            if self.p is not None and any(r % self.p == 0 for r in self.dims):
                raise CliError(f"lengths {self.dims} are not coprime to p={self.p} (non-semisimple)")
        names = [s.strip() for s in self.bounds.split(",") if s.strip()]
        unknown = [s for s in names if s not in BUILTIN]
        if unknown:
            raise CliError(f"unknown bounds {unknown}; choose from {sorted(BUILTIN)}")
        if self.orbit_cap < 1:
            raise CliError("orbit cap must be positive")
        if self.cap_k is not None and self.cap_k < 0:
            raise CliError("cap_k must be nonnegative")
        if self.threads is not None and self.threads < 1:
            raise CliError("thread count must be positive")
        if self.format not in FORMATS:
            raise CliError(f"format must be one of {FORMATS}")

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("timestamp")
        return d


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x != ""]


def _split_q(q: int) -> tuple[int, int]:
    ps = prime_factors(q)
    if len(ps) != 1:
        raise CliError(f"q={q} is not a prime power")
    p = ps[0]
    m, x = 0, q
    while x > 1:
        x //= p
        m += 1
    return p, m


def _config(args) -> RunConfig:
    base: dict = {}
    if getattr(args, "config", None):
        base = load_json(args.config)
        unknown = set(base) - set(RunConfig.__dataclass_fields__)
        if unknown:
            raise CliError(f"unknown config keys {sorted(unknown)}")
    cfg = RunConfig(**base)
    for name in ("p", "m", "bounds", "orbit_cap", "cap_k", "threads", "format", "seed"):
        v = getattr(args, name, None)
        if v is not None:
            setattr(cfg, name, v)
    if getattr(args, "q", None) is not None:
        cfg.p, cfg.m = _split_q(args.q)
    if getattr(args, "dims", None):
        cfg.dims = _ints(args.dims)
    if getattr(args, "no_timestamp", False) or os.environ.get("ABELCODES_NO_TIMESTAMP"):
        cfg.timestamp = False
    if cfg.threads is None and os.environ.get(THREADS_ENV):
        cfg.threads = int(os.environ[THREADS_ENV])
    cfg.validate()
    return cfg


def _code_arg(args, cfg: RunConfig) -> AbelianCode:
    C = load_code(args.code)
    cfg.p, cfg.m, cfg.dims = C.ctx.p, C.ctx.m, list(C.dims)
    cfg.validate()
    return C


def _support_arg(args, cfg: RunConfig) -> SupportHypermatrix:
    if args.code:
        return afforded(_code_arg(args, cfg).defining_set)
    if args.support:
        M = support_from_dict(load_json(args.support))
        cfg.dims = list(M.dims)
        return M
    raise CliError("give --code or --support")


# --- subcommands -------------------------------------------------------------


def cmd_orbit(args, cfg: RunConfig) -> dict:
    q = args.q if args.q is not None else (cfg.p**cfg.m if cfg.p else None)
    if q is None:
        raise CliError("--q is required")
    if args.n is not None:
        dims = (args.n,)
    elif cfg.dims:
        dims = tuple(cfg.dims)
    else:
        raise CliError("give --n or --dims")
    rep = tuple(_ints(args.rep))
    if len(rep) != len(dims):
        raise CliError(f"representative {rep} does not match dims {dims}")
    O = q_orbit(rep, q, dims)
    members = sorted(O)
    if len(dims) == 1:
        # generation order b, qb, q^2 b, ... matches the usual coset listing
        seq, x = [], rep[0] % dims[0]
        while x not in seq:
            seq.append(x)
            x = x * q % dims[0]
        return {"orbit": seq, "size": len(seq)}
    return {"orbit": [list(a) for a in members], "size": len(members)}


def cmd_bound(args, cfg: RunConfig) -> dict:
    n = args.n
    N = _ints(args.set) if args.set else []
    if any(not 0 <= x < n for x in N):
        raise CliError(f"set elements must lie in 0..{n - 1}")
    mask = to_mask(N, n)
    B = bound_set(cfg.bounds)
    return {"n": n, "set": sorted(set(N)), "bch": bch_optimal(n, mask), "ht": ht_optimal(n, mask),
            "bound_set": list(B.names), "value": bound_set_eval(B, n, mask)}


def cmd_apparent(args, cfg: RunConfig) -> dict:
    M = _support_arg(args, cfg)
    rep = hyper_apparent(M, bound_set(cfg.bounds))
    return rep.to_dict()


def cmd_bmad(args, cfg: RunConfig) -> dict:
    M = _support_arg(args, cfg)
    t = bmad(M, bound_set(cfg.bounds))
    return {"trace": t.to_records(), "result": t.result, "early_stop": t.early_stop,
            "first_min_step": t.first_min_index}


def cmd_code_info(args, cfg: RunConfig) -> dict:
    C = _code_arg(args, cfg)
    B = bound_set(cfg.bounds)
    M = afforded(C.defining_set)
    out = {"code": C.to_dict(), "length": C.length, "dimension": dimension(C),
           "defining_set_size": len(C.defining_set)}
    if C.is_zero_code():
        return out
    out["apparent_at_roots"] = code_apparent_at(C, None, B)
    out["apparent"] = code_apparent(C, B)
    if len(C.dims) == 2:
        proj = is_cp_matrix(M)
        out["cp_matrix"] = proj is not None
        if proj is not None:
            spec = recognize_bivariate_bch(C)
            out["bch"] = spec.to_dict() if spec else None
    return out


def _choose(f, h, u):
    """Fill in whichever of (shift, root exponent) is missing for a rational shifted factor."""
    r = f.dims[0]
    if h is not None and u is not None:
        return h, u
    if h is not None:
        us = rational_exponents(f, h)
        if not us:
            raise CliError(f"X^{h} times the factor is not rational for any root of order {r}")
        return h, us[0]
    for v in [u] if u is not None else [v for v in range(1, max(r, 2)) if math.gcd(v, r) == 1]:
        found = rational_shift(f, primitive_root(f.ctx, r) ** (v % r))
        if found is not None:
            return found, v
    raise CliError("no shift makes the factor rational")


def cmd_construct(args, cfg: RunConfig) -> dict:
    if not cfg.p or not cfg.dims or len(cfg.dims) != 2:
        raise CliError("construct needs --q (or --p/--m) and --dims r1,r2")
    ctx = make_context(cfg.p, cfg.m, tuple(cfg.dims))
    a = parse_univariate(ctx, args.a, cfg.dims[0])
    b = parse_univariate(ctx, args.b, cfg.dims[1])
    u = _ints(args.roots) if args.roots else [None, None]
    h1, u1 = _choose(a, args.h1, u[0])
    h2, u2 = _choose(b, args.h2, u[1])
    con = construct_true_distance_code(a, b, RootSelection((u1, u2)), h1, h2, ctx)
    return {"code": con.code.to_dict(), "dimension": dimension(con.code), "certificate": con.certificate(),
            "witness": poly_to_dict(con.witness)}


def cmd_verify(args, cfg: RunConfig) -> dict:
    C = _code_arg(args, cfg)
    return verify_true_distance(C, bound_set(cfg.bounds), cfg.orbit_cap).to_dict()


def cmd_bch(args, cfg: RunConfig) -> dict:
    if not cfg.p or not cfg.dims:
        raise CliError("bch needs --q (or --p/--m) and --dims")
    spec = BchSpec(tuple(_ints(args.gamma)), tuple(_ints(args.delta)), tuple(_ints(args.offsets)))
    q = cfg.p**cfg.m
    D = bch_defining_set(spec, q, cfg.dims)
    ctx = make_context(cfg.p, cfg.m, tuple(cfg.dims))
    roots = RootSelection(tuple(_ints(args.roots))) if args.roots else RootSelection.default(len(cfg.dims))
    C = AbelianCode(ctx, D, roots)
    return {"spec": spec.to_dict(), "code": C.to_dict(), "dimension": dimension(C),
            "defining_set": orbitset_to_dict(D)}


def cmd_mindist(args, cfg: RunConfig) -> dict:
    C = _code_arg(args, cfg)
    cap = args.cap if args.cap is not None else cfg.cap_k
    out = {"dimension": dimension(C)}
    if args.trials:
        out["upper_bound"] = weight_upper_bound(C, trials=args.trials, seed=cfg.seed)
        out["trials"] = args.trials
        try:
            out["min_distance"] = min_distance_bruteforce(C, cap_k=cap, threads=cfg.threads)
        except ValueError as exc:
            # sampling still gives an answer when exhaustive search is over the cap
            out["min_distance"] = None
            out["skipped"] = str(exc)
        return out
    out["min_distance"] = min_distance_bruteforce(C, cap_k=cap, threads=cfg.threads)
    return out


def cmd_table(args, cfg: RunConfig) -> dict:
    rows, seconds = timed_regenerate(args.which)
    mismatches = []
    for i, r in enumerate(rows, start=1):
        for msg in r.mismatches():
            mismatches.append({"row": i, "column": msg.split()[0] if not msg.startswith("certified") else "d_certified",
                               "detail": msg})
    return {"table": args.which, "rows": [r.to_dict() for r in rows], "columns": CSV_COLUMNS[args.which],
            "mismatches": mismatches, **({"seconds": round(seconds, 3)} if cfg.timestamp else {})}


COMMANDS = {
    "orbit": cmd_orbit, "bound": cmd_bound, "apparent": cmd_apparent, "bmad": cmd_bmad,
    "code-info": cmd_code_info, "construct": cmd_construct, "verify": cmd_verify, "bch": cmd_bch,
    "mindist": cmd_mindist, "table": cmd_table,
}


# --- parsing and output --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file (or inline JSON) with RunConfig fields")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--bounds", help="comma list of ds-bounds, e.g. bch,ht (bch is always included)")
    common.add_argument("--p", type=int, help="field characteristic")
    common.add_argument("--m", type=int, help="degree of the base field over F_p")
    common.add_argument("--q", type=int, help="base field size (prime power); overrides --p/--m")
    common.add_argument("--dims", help="lengths r1,...,rs")
    common.add_argument("--orbit-cap", type=int, dest="orbit_cap")
    common.add_argument("--cap-k", type=int, dest="cap_k")
    common.add_argument("--threads", type=int, help=f"worker threads (default from ${THREADS_ENV})")
    common.add_argument("--seed", type=int)
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")

    ap = argparse.ArgumentParser(prog="abelcodes", description="Apparent distance and true-distance abelian codes.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbit", parents=[common], help="q-orbit of an index")
    s.add_argument("--n", type=int, help="length of a cyclic index set")
    s.add_argument("--rep", required=True, help="representative, comma separated")

    s = sub.add_parser("bound", parents=[common], help="BCH / HT bounds of a subset of Z_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", default="", help="elements of N, comma separated")

    for name in ("apparent", "bmad"):
        s = sub.add_parser(name, parents=[common], help=f"{name} of a support matrix or of a code's afforded matrix")
        s.add_argument("--code", help="code JSON file or inline JSON")
        s.add_argument("--support", help="support JSON file or inline JSON")

    for name, hlp in (("code-info", "summary of a code"), ("verify", "search for a true-distance proof")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("--code", required=True)

    s = sub.add_parser("mindist", parents=[common], help="exhaustive minimum distance")
    s.add_argument("--code", required=True)
    s.add_argument("--cap", type=int, help="largest dimension allowed")
    s.add_argument("--trials", type=int, help="also sample this many random codewords (seeded by --seed)")

    s = sub.add_parser("construct", parents=[common], help="code generated by idft(X^h1 a * X^h2 b)")
    s.add_argument("--a", required=True, help="divisor of X^r1 - 1, e.g. 1+X or 0,1")
    s.add_argument("--b", required=True, help="divisor of X^r2 - 1")
    s.add_argument("--h1", type=int)
    s.add_argument("--h2", type=int)
    s.add_argument("--roots", help="unit exponents u1,u2 selecting the roots of unity")

    s = sub.add_parser("bch", parents=[common], help="bivariate BCH code from (gamma, delta, offsets)")
    s.add_argument("--gamma", required=True)
    s.add_argument("--delta", required=True)
    s.add_argument("--offsets", required=True)
    s.add_argument("--roots")

    s = sub.add_parser("table", parents=[common], help="regenerate a reference table and diff it")
    s.add_argument("which", type=int, choices=(1, 2, 3, 4))
    return ap


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return "" if v is None else str(v)


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True)
    result = record.get("result", {})
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        if "rows" in result:
            cols = result["columns"]
            w.writerow(cols)
            for r in result["rows"]:
                w.writerow([_cell(r.get(c)) for c in cols])
        elif "trace" in result:
            w.writerow(["step", "delta", "m", "support_reps"])
            for r in result["trace"]:
                w.writerow([r["step"], r["delta"], r["m"], json.dumps(r["support_reps"])])
        else:
            w.writerow(["key", "value"])
            for k in sorted(result):
                v = result[k]
                w.writerow([k, json.dumps(v) if isinstance(v, (dict, list)) else _cell(v)])
        return buf.getvalue().rstrip("\n")
    lines = []
    for k in sorted(result):
        v = result[k]
        if k == "rows":
            for r in v:
                lines.append("  " + ", ".join(f"{c}={_cell(r.get(c))}" for c in result["columns"]))
        else:
            lines.append(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    return "\n".join(lines)


def _error(exc: BaseException, code: int) -> int:
    rec = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    print(json.dumps(rec, sort_keys=True))
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        result = COMMANDS[args.command](args, cfg)
    except (CliError, FieldError, ConstructionError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        return _error(exc, 2)
    record = {"command": args.command, "config": cfg.echo(), "result": result}
    if cfg.timestamp:
        record["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    print(render(record, cfg.format))
    if args.command == "table" and result["mismatches"]:
        print(json.dumps({"error": {"type": "TableMismatch", "mismatches": result["mismatches"]}}, sort_keys=True),
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
