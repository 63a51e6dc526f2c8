"""Command-line front end: moment tables, identity verification grids, and
raw sequence listings, in text, json, or csv.

Exit codes: 0 all (non-skipped) checks pass, 1 a verification failed,
2 usage error or an ill-defined request.  Output is byte-stable for
fixed inputs; the only timing appears in a trailing comment line of the
text format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import paths, reciprocity
from .moments import (
    IllDefinedError,
    bounded_moment,
    moment_vectors,
    negative_moment,
    well_defined,
)
from .poly import MultiPoly
from .ratfunc import RatFunc
from .weights import WeightSpec, spec as make_spec

USAGE_ERROR = 2
FAIL_ERROR = 1


def _parse_range(text: str) -> List[int]:
    """`a..b` inclusive, or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]


def _render_value(v) -> str:
    if isinstance(v, (MultiPoly, RatFunc)):
        return v.render()
    return str(v)


class Report:
    """Accumulated rows with a stable schema, rendered per --format."""

    def __init__(self, command: str, params: Dict[str, object], columns: Sequence[str]):
        self.command = command
        self.params = params
        self.columns = list(columns)
        self.rows: List[List[str]] = []
        self.started = time.monotonic()

    def add(self, *cells: object):
        self.rows.append([str(c) for c in cells])

    def emit(self, fmt: str, out=None) -> None:
        out = out or sys.stdout
        if fmt == "json":
            payload = {
                "command": self.command,
                "params": {k: str(v) for k, v in self.params.items()},
                "results": [dict(zip(self.columns, row)) for row in self.rows],
            }
            json.dump(payload, out, indent=2, sort_keys=True)
            out.write("\n")
            return
        if fmt == "csv":
            out.write(",".join(self.columns) + "\n")
            for row in self.rows:
                out.write(",".join(cell.replace(",", ";") for cell in row) + "\n")
            return
        for row in self.rows:
            out.write(" ".join(row) + "\n")
        elapsed = time.monotonic() - self.started
        out.write(f"# elapsed {elapsed:.3f}s\n")


def _build_spec(args) -> WeightSpec:
    return make_spec(args.b, getattr(args, "lam"))


def cmd_moment(args) -> int:
    spec = _build_spec(args)
    ns = _parse_range(args.n)
    report = Report("moment",
                    {"n": args.n, "r": args.r, "s": args.s, "k": args.k,
                     "b": args.b, "lambda": args.lam,
                     "negative": args.negative},
                    ["n", "value"])
    if args.negative:
        ok, cert = well_defined(args.k, spec)
        if not ok:
            sys.stderr.write(
                f"error: negative moments undefined: P_{args.k + 1}(0) = "
                f"{cert.render()}\n")
            return USAGE_ERROR
        for n in ns:
            if n < 1:
                sys.stderr.write("error: negative moment indices start at 1\n")
                return USAGE_ERROR
            val = negative_moment(n, args.r, args.s, args.k, spec)
            report.add(n, _render_value(val))
    else:
        top = max(ns)
        seq = {}
        for i, u in enumerate(moment_vectors(args.k, spec, args.r, top)):
            seq[i] = u[args.s]
        for n in ns:
            report.add(n, _render_value(seq[n]))
    report.emit(args.format)
    return 0


def cmd_sequence(args) -> int:
    fam = args.family
    report = Report("sequence",
                    {"family": fam, "n": args.n, "k": args.k, "m": args.m,
                     "ell": args.ell, "emit": args.emit},
                    ["item"])
    n = int(args.n)
    if fam == "motzkin":
        objs = paths.motzkin_paths(n, args.r or 0, args.s or 0, args.k)
        enc = paths.encode_motzkin
        wt = lambda p: paths.wt_motzkin(p, make_spec("symbolic", "symbolic"),
                                        args.r or 0).render()
    elif fam == "schroeder":
        from .weights import laurent_symbolic
        objs = paths.schroeder_paths(n, args.k)
        enc = paths.encode_schroeder
        ls = laurent_symbolic()
        wt = lambda p: paths.wt_schroeder(p, ls.b, ls.a).render()
    elif fam == "pv":
        if args.ell is None:
            sys.stderr.write("error: pv needs --ell\n")
            return USAGE_ERROR
        r = None if args.r is None else args.r
        s = None if args.s is None else args.s
        objs = paths.pv_sequences(args.ell, n, args.k,
                                  modified=args.variant == "modified", r=r, s=s)
        enc = paths.encode_seq
        wt = lambda p: paths.wt_seq_v(p).render()
    elif fam == "alt":
        endpoints = None
        if args.r is not None and args.s is not None:
            endpoints = (args.r, args.s)
        objs = paths.alt_sequences(n, args.k, down_first=args.pattern == "down-first",
                                   endpoints=endpoints)
        enc = paths.encode_seq
        wt = lambda p: paths.wt_seq_av(p).render() if len(p) % 2 else paths.wt_seq_v(p).render()
    elif fam == "rpp":
        if args.m is None:
            sys.stderr.write("error: rpp needs --m\n")
            return USAGE_ERROR
        objs = paths.rpp_fillings(n, args.m, args.k)
        enc = lambda T: paths.encode_rpp(T, n, args.m)
        wt = lambda T: paths.wt_rpp(T, n).render()
    else:
        sys.stderr.write(f"error: unknown family {fam!r}\n")
        return USAGE_ERROR
    if args.emit == "count":
        report.add(len(objs))
    elif args.emit == "list":
        for o in objs:
            report.add(enc(o))
    else:
        for o in objs:
            report.add(enc(o), wt(o))
        report.columns = ["item", "weight"]
    report.emit(args.format)
    return 0


# -- verify ---------------------------------------------------------------------

def _spec_from_name(name: str) -> WeightSpec:
    table = {
        "zero-one": ("zero", "one"),
        "one-one": ("one", "one"),
        "symbolic": ("symbolic", "symbolic"),
    }
    if name not in table:
        raise ValueError(f"unknown spec shorthand {name!r}")
    return make_spec(*table[name])


def _verify_tuples(identity: str, args) -> List[Tuple[Tuple, Dict]]:
    """Sorted parameter tuples for one identity, from the range flags."""
    ns = _parse_range(args.n) if args.n else [1]
    ks = _parse_range(args.k) if args.k else [1]
    ms = _parse_range(args.m) if args.m else [1]
    rs = _parse_range(args.r) if args.r else None
    ss = _parse_range(args.s) if args.s else None
    out = []
    if identity in ("ck", "pv2", "pv3a", "pv3b", "sigma", "connection1",
                    "connection2"):
        for n in ns:
            for k in ks:
                out.append(((n, k), {"n": n, "k": k}))
    elif identity == "ck-rs":
        for n in ns:
            for k in ks:
                for r in (rs or range(1, k + 1)):
                    for s in (ss or range(1, k + 1)):
                        out.append(((n, k, r, s), {"n": n, "k": k, "r": r, "s": s}))
    elif identity == "pv3-rs":
        for n in ns:
            for k in ks:
                for r in (rs or range(0, 3 * k + 1)):
                    for s in (ss or range(0, 3 * k + 1)):
                        out.append(((n, k, r, s), {"n": n, "k": k, "r": r, "s": s}))
    elif identity in ("thm15", "conj50", "conj53", "thm34"):
        for n in ns:
            for k in ks:
                for m in ms:
                    out.append(((n, k, m), {"n": n, "k": k, "m": m}))
    elif identity == "main":
        for n in ns:
            for k in ks:
                for m in ms:
                    out.append(((n, k, m), {"n": n, "k": k, "m": m,
                                            "spec": args.spec}))
    elif identity == "rpp":
        for n in ns:
            for k in ks:
                for m in ms:
                    out.append(((n, m, k), {"n": n, "m": m, "k": k,
                                            "mode": args.mode}))
    elif identity in ("usmani", "vv-inv", "alt-cf", "special-dets"):
        for k in ks:
            out.append(((k,), {"k": k}))
    else:
        raise ValueError(f"unknown identity {identity!r}")
    out.sort(key=lambda t: t[0])
    return out


def run_check(identity: str, params: Dict) -> reciprocity.IdentityCheck:
    """Dispatch one verification tuple (picklable for worker pools)."""
    if identity == "ck":
        return reciprocity.check_ck(params["n"], params["k"])
    if identity == "ck-rs":
        return reciprocity.check_ck_rs(params["n"], params["k"], params["r"], params["s"])
    if identity == "thm15":
        return reciprocity.check_theorem15(params["n"], params["k"], params["m"])
    if identity == "main":
        spec = _spec_from_name(params.get("spec", "symbolic"))
        return reciprocity.check_main_reciprocity(params["n"], params["k"],
                                                  params["m"], spec)
    if identity == "conj50":
        return reciprocity.check_conjecture50(params["n"], params["k"], params["m"])
    if identity == "conj53":
        return reciprocity.check_conjecture53(params["n"], params["k"], params["m"])
    if identity == "thm34":
        return reciprocity.check_theorem34(params["n"], params["k"], params["m"])
    if identity == "rpp":
        return reciprocity.check_rpp_identity(params["n"], params["m"], params["k"],
                                              mode=params.get("mode", "symbolic-VA"))
    if identity == "pv2":
        return reciprocity.check_pv2(params["n"], params["k"])
    if identity == "pv3a":
        return reciprocity.check_pv3a(params["n"], params["k"])
    if identity == "pv3b":
        return reciprocity.check_pv3b(params["n"], params["k"])
    if identity == "pv3-rs":
        return reciprocity.check_pv3_rs(params["n"], params["k"], params["r"], params["s"])
    if identity == "usmani":
        return reciprocity.check_usmani(params["k"])
    if identity == "vv-inv":
        return reciprocity.check_vv_inverse(params["k"])
    if identity == "sigma":
        return reciprocity.check_sigma(params["n"], params["k"])
    if identity == "alt-cf":
        return reciprocity.check_alt_cf(params["k"])
    if identity == "special-dets":
        return reciprocity.check_special_dets(params["k"])
    if identity == "connection1":
        return reciprocity.check_connection1(params["n"], params["k"])
    if identity == "connection2":
        return reciprocity.check_connection2(params["n"], params["k"])
    raise ValueError(f"unknown identity {identity!r}")


def _run_one(job):
    identity, key, params = job
    try:
        check = run_check(identity, params)
    except IllDefinedError as exc:
        return key, params, "SKIPPED", str(exc)
    return key, params, check.status, check.witness or check.reason


def cmd_verify(args) -> int:
    identity = args.identity
    try:
        tuples = _verify_tuples(identity, args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    jobs = [(identity, key, params) for key, params in tuples]
    workers = int(os.environ.get("NEGMOM_THREADS", "1"))
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(job) for job in jobs]
    results.sort(key=lambda r: r[0])
    report = Report("verify", {"identity": identity}, ["line"])
    failed = False
    for key, params, status, witness in results:
        ptxt = ",".join(f"{k}={v}" for k, v in params.items())
        line = f"{identity} params={ptxt} status={status}"
        if status == "FAIL":
            failed = True
            if witness:
                line += f" witness={witness}"
        report.add(line)
    if args.format == "json":
        report.columns = ["identity", "params", "status", "witness"]
        report.rows = []
        for key, params, status, witness in results:
            report.add(identity, ",".join(f"{k}={v}" for k, v in params.items()),
                       status, witness or "")
    report.emit(args.format)
    return FAIL_ERROR if failed else 0


IDENTITIES = ["ck", "ck-rs", "thm15", "main", "conj50", "conj53", "thm34",
              "rpp", "pv2", "pv3a", "pv3b", "pv3-rs", "usmani", "vv-inv",
              "sigma", "alt-cf", "special-dets", "connection1", "connection2"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negmom",
        description="Exact bounded/negative moment computations and "
                    "identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_m = sub.add_parser("moment", help="table of bounded or negative moments")
    p_m.add_argument("--n", required=True, help="index or range a..b")
    p_m.add_argument("--r", type=int, default=0)
    p_m.add_argument("--s", type=int, default=0)
    p_m.add_argument("--k", type=int, required=True, help="height bound")
    p_m.add_argument("--b", default="symbolic", help="b-sequence expression")
    p_m.add_argument("--lambda", dest="lam", default="symbolic",
                     help="lambda-sequence expression")
    p_m.add_argument("--negative", action="store_true")
    p_m.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_m.set_defaults(func=cmd_moment)

    p_v = sub.add_parser("verify", help="run an identity over parameter ranges")
    p_v.add_argument("identity", choices=IDENTITIES)
    p_v.add_argument("--n", help="range a..b")
    p_v.add_argument("--k", help="range a..b")
    p_v.add_argument("--m", help="range a..b")
    p_v.add_argument("--r", help="range a..b")
    p_v.add_argument("--s", help="range a..b")
    p_v.add_argument("--spec", default="symbolic",
                     choices=["symbolic", "zero-one", "one-one"],
                     help="weight spec for the main reciprocity")
    p_v.add_argument("--mode", default="symbolic-VA",
                     choices=["symbolic-VA", "q", "q-unbounded"])
    p_v.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_v.set_defaults(func=cmd_verify)

    p_s = sub.add_parser("sequence", help="enumerate a combinatorial family")
    p_s.add_argument("family", choices=["alt", "pv", "schroeder", "motzkin", "rpp"])
    p_s.add_argument("--n", required=True)
    p_s.add_argument("--k", type=int, required=True)
    p_s.add_argument("--m", type=int)
    p_s.add_argument("--ell", type=int)
    p_s.add_argument("--r", type=int)
    p_s.add_argument("--s", type=int)
    p_s.add_argument("--variant", choices=["plain", "modified"], default="plain")
    p_s.add_argument("--pattern", choices=["up-first", "down-first"],
                     default="up-first")
    p_s.add_argument("--emit", choices=["count", "list", "weights"],
                     default="count")
    p_s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_s.set_defaults(func=cmd_sequence)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IllDefinedError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
