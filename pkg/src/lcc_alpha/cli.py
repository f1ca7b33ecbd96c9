"""Command-line interface.

Exit codes: 0 success or bound holds, 1 a verification failed or a bound
failed, 2 bad input.
"""
import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone

from . import conjecture, fatpoints, keycase, oracle, seqcomb
from .errors import InputError, RealizationError, ScheduleError

SEARCH_MAX_CAP = 12
SEARCH_MAX_T = 9


class Output:
    """One command result, renderable as json, csv or a plain table."""

    def __init__(self, data, header=None, rows=None, text=None, code=0, extra_files=None):
        self.data = data
        self.header = header
        self.rows = rows
        self.text = text
        self.code = code
        self.extra_files = extra_files or {}


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def emit(out, fmt, timestamp=True):
    if fmt == "json":
        data = dict(out.data)
        if timestamp:
            data["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        if out.header is None:
            raise InputError("this command has no CSV form; use --format json")
        return _csv_text(out.header, out.rows)
    if out.text is not None:
        return out.text.rstrip("\n") + "\n"
    if out.header is not None:
        widths = [max(len(str(x)) for x in col) for col in zip(out.header, *out.rows)]
        lines = ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip()
                 for r in [out.header, *out.rows]]
        return "\n".join(lines) + "\n"
    return json.dumps(out.data, indent=2) + "\n"


def _ints(s):
    try:
        return tuple(int(x) for x in s.split(",") if x.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from exc


def _seq(ds):
    return ",".join(map(str, ds.prefix))


# -- handlers ----------------------------------------------------------------

def cmd_ops(args):
    if args.op == "star":
        v = seqcomb.star(args.a, args.m)
        return Output({"a": list(args.a), "m": list(args.m), "star": list(v)},
                      ["star"], [[",".join(map(str, v))]], ",".join(map(str, v)))
    v = args.v
    if args.op == "diag":
        dg = seqcomb.diag(v)
        return Output({"v": list(v), "diag": list(dg.prefix), "tail": dg.tail},
                      ["diag"], [[_seq(dg)]], _seq(dg))
    if args.op == "gms":
        ok = seqcomb.is_gms(v)
        return Output({"v": list(v), "delta": list(seqcomb.delta(v)), "gms": ok},
                      ["gms"], [[str(ok).lower()]], str(ok).lower())
    a_closed = seqcomb.alpha_diag_closed(v)
    a_scan = seqcomb.alpha_seq(seqcomb.diag(v))
    s = seqcomb.s_of(v)
    return Output({"v": list(v), "alpha": a_closed, "alpha_scan": a_scan, "S": s},
                  ["alpha", "alpha_scan", "S"], [[a_closed, a_scan, s]], str(a_closed),
                  code=0 if a_closed == a_scan == len(v) - s else 1)


def _claim_row(r):
    return [r.params.ell, r.params.t, r.max_phi, r.witness_j, r.bound.twice_value, str(r.holds).lower()]


CLAIM_HEADER = ["ell", "t", "max_phi", "witness_j", "doubled_bound", "holds"]


def cmd_keycase(args):
    if args.action == "verify":
        rep = keycase.verify_claim(keycase.KeyCaseParams(args.ell, args.t))
        data = {"ell": args.ell, "t": args.t, "max_phi": rep.max_phi, "witness_j": rep.witness_j,
                "S": max(0, rep.max_phi), "bound": str(rep.bound),
                "doubled_bound": rep.bound.twice_value, "holds": rep.holds}
        text = (f"ell={args.ell} t={args.t} max_phi={rep.max_phi} at j={rep.witness_j} "
                f"bound={rep.bound} {'holds' if rep.holds else 'FAILS'}")
        return Output(data, CLAIM_HEADER, [_claim_row(rep)], text, code=0 if rep.holds else 1)
    reports = keycase.sweep(args.ell_max, args.t_max, jobs=args.jobs)
    bad = [r for r in reports if not r.holds]
    data = {"ell_max": args.ell_max, "t_max": args.t_max, "cells": len(reports),
            "failures": [[r.params.ell, r.params.t] for r in bad],
            "rows": [_claim_row(r) for r in reports]}
    return Output(data, CLAIM_HEADER, [_claim_row(r) for r in reports], code=1 if bad else 0)


def cmd_scheme(args):
    Y, lines = fatpoints.load_scheme(args.scheme)
    names = [n.strip() for n in args.order.split(",") if n.strip()]
    missing = [n for n in names if n not in lines]
    if missing:
        raise InputError(f"unknown line names {missing}; file defines {list(lines)}")
    trace = fatpoints.reduce_by_sequence(Y, [lines[n] for n in names])
    data = {"order": names, "d": list(trace.d), "totally_reduced": trace.totally_reduced,
            "degree": Y.degree,
            "steps": [fatpoints.scheme_to_dict(s)["points"] for s in trace.steps]}
    text = f"d={','.join(map(str, trace.d))} totally_reduced={str(trace.totally_reduced).lower()}"
    if trace.totally_reduced and seqcomb.is_nondecreasing(trace.d):
        f = fatpoints.hilbert_lower_bound(trace.d)
        data["f_d"] = list(f.prefix)
        data["alpha_lower_bound"] = fatpoints.alpha_lower_bound(trace.d)
        text += f" f_d={_seq(f)},... alpha>={data['alpha_lower_bound']}"
    return Output(data, ["d", "totally_reduced"],
                  [[",".join(map(str, trace.d)), str(trace.totally_reduced).lower()]], text,
                  code=0 if trace.totally_reduced else 1)


def cmd_lcc(args):
    if args.action == "build":
        T = fatpoints.build_lcc(args.c, args.a, seed=args.seed)
        data = fatpoints.lcc_to_dict(T)
        data["seed"] = args.seed
        return Output(data, text=json.dumps(data, indent=2))
    rep = conjecture.verify_lcc_conjecture(args.c, args.r, args.parity)
    d = rep.to_dict()
    text = (f"c={','.join(map(str, rep.c))} ell={rep.ell} r={rep.r} {rep.parity}: "
            f"S={rep.s_value} bound={rep.bound} {rep.outcome.value} ({rep.outcome.note})")
    return Output(d, list(rep.CSV_HEADER), [list(rep.csv_row())], text,
                  code=0 if rep.outcome is conjecture.Outcome.BOUND_HOLDS else 1)


def cmd_search(args):
    if args.cap > SEARCH_MAX_CAP or args.t > SEARCH_MAX_T:
        raise InputError(f"guardrail: cap <= {SEARCH_MAX_CAP} and t <= {SEARCH_MAX_T}")
    res = conjecture.search_failures(args.ell, args.t, args.cap, args.parity, jobs=args.jobs)
    maximal = set(res.maximal_failing)
    header = ["c", "maximal"]
    rows = [[" ".join(map(str, c)), str(c in maximal).lower()] for c in res.failing]
    text = (f"scanned {res.scanned_count} vectors; {len(res.failing)} fail; maximal failing: "
            + (", ".join("(" + ",".join(map(str, c)) + ")" for c in res.maximal_failing) or "none"))
    return Output(res.to_dict(), header, rows, text, code=1 if res.failing else 0,
                  extra_files={".failing.csv": _csv_text(header, rows)})


def cmd_hilbert(args):
    Y, _ = fatpoints.load_scheme(args.scheme)
    res = oracle.hilbert_exact(Y, args.t_max, method=args.method)
    vals = res.values.prefix
    rows = [[t, h] for t, h in enumerate(vals)]
    text = f"H={','.join(map(str, vals))},... alpha={res.alpha} ({res.method})"
    return Output(res.to_dict(), ["t", "H"], rows, text)


def cmd_compare(args):
    c = args.c
    if args.a is not None:
        a = args.a
    else:
        a = (args.ell,) * len(c)
    T = fatpoints.build_lcc(c, a, seed=args.seed)
    trace = fatpoints.schedule_star(T)
    f = fatpoints.hilbert_lower_bound(trace.d)
    res = oracle.hilbert_exact(T.scheme(), method=args.method)
    n = max(len(f.prefix), len(res.values.prefix))
    rows = [[t, f[t], res.values[t]] for t in range(n)]
    ok = all(f[t] <= res.values[t] for t in range(n))
    alpha_lb = fatpoints.alpha_lower_bound(trace.d)
    data = {"c": list(c), "a": list(a), "seed": args.seed, "d": list(trace.d),
            "gms": seqcomb.is_gms(trace.d), "f_d": [r[1] for r in rows], "H": [r[2] for r in rows],
            "alpha_lower_bound": alpha_lb, "alpha": res.alpha, "method": res.method,
            "lower_bound_ok": ok}
    text = "\n".join([f"d={','.join(map(str, trace.d))} gms={str(data['gms']).lower()}",
                      f"f_d={','.join(str(r[1]) for r in rows)}",
                      f"H  ={','.join(str(r[2]) for r in rows)}",
                      f"alpha>={alpha_lb} alpha={res.alpha}"])
    return Output(data, ["t", "f_d", "H"], rows, text, code=0 if ok else 1)


def cmd_subset(args):
    B, _ = fatpoints.load_scheme(args.scheme)
    A = oracle.extract_generic_subset(B, method=args.method)
    hb = oracle.hilbert_exact(B, method=args.method)
    ha = oracle.hilbert_exact(A, method=args.method)
    dh = list(ha.values.first_difference().prefix)
    while dh and dh[-1] == 0:
        dh.pop()
    data = {"alpha_B": hb.alpha, "alpha_A": ha.alpha, "size": len(A),
            "delta_H_A": dh, "subset": fatpoints.scheme_to_dict(A)["points"]}
    return Output(data, text=json.dumps(data, indent=2))


# -- parser ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--no-timestamp", action="store_true")
    common.add_argument("--jobs", type=int, default=1)

    p = argparse.ArgumentParser(prog="lcc-alpha", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ops = sub.add_parser("ops", help="vector operators")
    ops_sub = ops.add_subparsers(dest="op", required=True)
    sp = ops_sub.add_parser("star", parents=[common])
    sp.add_argument("--a", type=_ints, required=True)
    sp.add_argument("--m", type=_ints, required=True)
    for name in ("diag", "gms", "alpha"):
        sp = ops_sub.add_parser(name, parents=[common])
        sp.add_argument("--v", type=_ints, required=True)
    ops.set_defaults(func=cmd_ops)

    kc = sub.add_parser("keycase", help="key-case bound on Phi")
    kc_sub = kc.add_subparsers(dest="action", required=True)
    sp = kc_sub.add_parser("verify", parents=[common])
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp = kc_sub.add_parser("sweep", parents=[common])
    sp.add_argument("--ell-max", type=int, required=True)
    sp.add_argument("--t-max", type=int, required=True)
    kc.set_defaults(func=cmd_keycase)

    sc = sub.add_parser("scheme", help="fat point scheme tools")
    sc_sub = sc.add_subparsers(dest="action", required=True)
    sp = sc_sub.add_parser("reduce", parents=[common])
    sp.add_argument("--scheme", required=True, help="scheme JSON file")
    sp.add_argument("--order", required=True, help="line names in application order, e.g. l1,l2,l3,l1")
    sc.set_defaults(func=cmd_scheme)

    lc = sub.add_parser("lcc", help="line count configurations")
    lc_sub = lc.add_subparsers(dest="action", required=True)
    sp = lc_sub.add_parser("build", parents=[common])
    sp.add_argument("--c", type=_ints, required=True)
    sp.add_argument("--a", type=_ints)
    sp = lc_sub.add_parser("verify", parents=[common])
    sp.add_argument("--c", type=_ints, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--parity", choices=("odd", "even"), required=True)
    lc.set_defaults(func=cmd_lcc)

    sp = sub.add_parser("search", parents=[common], help="maximal failing type vectors")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--parity", choices=("odd", "even"), required=True)
    sp.set_defaults(func=cmd_search)

    method = dict(choices=(oracle.RATIONAL, oracle.MODULAR), default=oracle.RATIONAL)
    sp = sub.add_parser("hilbert", parents=[common], help="exact Hilbert function of a scheme")
    sp.add_argument("--scheme", required=True)
    sp.add_argument("--t-max", type=int, default=0)
    sp.add_argument("--method", **method)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("compare", parents=[common], help="f_d against the exact Hilbert function")
    sp.add_argument("--c", type=_ints, required=True)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--a", type=_ints)
    grp.add_argument("--ell", type=int, default=1)
    sp.add_argument("--method", **method)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("subset-extract", parents=[common], help="generic subset with the same alpha")
    sp.add_argument("--scheme", required=True)
    sp.add_argument("--method", **method)
    sp.set_defaults(func=cmd_subset)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        out = args.func(args)
        text = emit(out, args.format, timestamp=not args.no_timestamp)
    except (InputError, RealizationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScheduleError as exc:
        print(f"error: {exc} (achieved {exc.achieved})", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        stem = args.out.rsplit(".", 1)[0] if args.out.endswith(".json") else args.out
        for suffix, body in out.extra_files.items():
            if args.format == "json":
                with open(stem + suffix, "w") as fh:
                    fh.write(body)
    else:
        sys.stdout.write(text)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
