"""Command-line front end: verification driver, decomposition explorer,
rendering, and seeded random suites.

Reports stream as JSON-lines (one per line); --pretty switches to a
human table.  Exit codes: 0 all verdicts are Pass/TrivialPass/Zero,
1 any Fail, 2 input error.  SCHURDET_THREADS caps parallelism for
batches (default serial).
"""

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import identities, schur, shapes, strips
from .identities import (THEOREM_IDS, SuiteConfig, random_instance,
                         run_instance, run_suite)
from .shapes import SkewShape, partition

GLYPHS = "123456789abcdefghijklmnopqrstuvwxyz"


class InputError(Exception):
    pass


def _parse_shape(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("bad shape JSON: %s" % e)
    if isinstance(obj, list):
        return SkewShape(partition(obj), ())
    if isinstance(obj, dict) and "outer" in obj:
        return SkewShape(partition(obj["outer"]),
                         partition(obj.get("inner", [])))
    raise InputError("shape must be a partition list or {outer, inner}")


def _threads():
    try:
        return max(1, int(os.environ.get("SCHURDET_THREADS", "1")))
    except ValueError:
        return 1


def _run_batch(jobs, threads):
    if threads > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as ex:
            nested = list(ex.map(identities._run_job, jobs))
    else:
        nested = [identities._run_job(j) for j in jobs]
    return [rep for group in nested for rep in group]


def _emit(reports, args):
    pretty = getattr(args, "pretty", False)
    stable = getattr(args, "stable", False)
    for rep in reports:
        if stable:
            rep.elapsed = 0.0
        if pretty:
            print("%-8s k=%-2d %-12s %8.1fms  lhs=%s rhs=%s" % (
                rep.theorem_id, rep.k, rep.verdict, rep.elapsed,
                rep.lhs_fingerprint[2], rep.rhs_fingerprint[2]))
        else:
            print(rep.to_json())
    return 0 if all(r.ok for r in reports) else 1


def cmd_verify(args):
    tid = args.theorem
    if args.instance:
        try:
            obj = json.loads(args.instance)
        except json.JSONDecodeError as e:
            raise InputError("bad instance JSON: %s" % e)
        if not isinstance(obj, dict):
            raise InputError("instance must be a JSON object")
        jobs = [(tid, obj)]
    elif args.random:
        rng = random.Random(args.seed)
        jobs = [(tid, random_instance(tid, rng, args.max_size))
                for _ in range(args.count)]
    else:
        raise InputError("need --instance or --random")
    try:
        reports = _run_batch(jobs, _threads())
    except (ValueError, KeyError, TypeError) as e:
        raise InputError(str(e))
    return _emit(reports, args)


def _render_grid(cells, inner_cells, outer_rows, contents=False):
    if not cells and not inner_cells:
        return ["(empty)"]
    rows = [i for i, _ in cells | inner_cells] or [1]
    cols = [j for _, j in cells | inner_cells] or [1]
    out = []
    for i in range(1, max(rows) + 1):
        line = []
        for j in range(1, max(cols) + 1):
            if (i, j) in cells:
                line.append(str(abs(j - i) % 10) if contents else "#")
            elif (i, j) in inner_cells:
                line.append(".")
            else:
                line.append(" ")
        out.append("".join(line).rstrip())
    return out


def cmd_render(args):
    s = _parse_shape(args.shape)
    print("shape: %s / %s" % (list(s.outer), list(s.inner)))
    cells = set(s.cells())
    inner_cells = set(shapes.partition_cells(s.inner))
    for line in _render_grid(cells, inner_cells, len(s.outer), args.contents):
        print(line)
    if args.contents and cells:
        lo = min(shapes.content(x) for x in cells)
        hi = max(shapes.content(x) for x in cells)
        print("contents: %d..%d (digits are |content| mod 10)" % (lo, hi))
    return 0


def cmd_decompose(args):
    s = _parse_shape(args.shape)
    choice = args.cutting_strip
    try:
        if choice == "outer":
            gamma = strips.outer_strip(s.outer)
        elif choice == "inner":
            gamma = strips.inner_strip(s)
        else:
            cells = json.loads(choice)
            gamma = strips.BorderStrip(tuple(tuple(x) for x in cells))
        dec = strips.decompose(s, gamma)
    except (ValueError, json.JSONDecodeError) as e:
        raise InputError("cutting strip rejected: %s" % e)
    if args.json:
        print(json.dumps({
            "strips": [[list(x) for x in st.cells] for st in dec.strips],
            "p": list(dec.p), "q": list(dec.q)}))
        return 0
    print("k=%d" % dec.k)
    owner = {}
    for idx, st in enumerate(dec.strips):
        for cell in st.cells:
            owner[cell] = GLYPHS[idx % len(GLYPHS)]
    cells = set(s.cells())
    if cells:
        maxi = max(i for i, _ in cells)
        maxj = max(j for _, j in cells)
        for i in range(1, maxi + 1):
            line = []
            for j in range(1, maxj + 1):
                if (i, j) in owner:
                    line.append(owner[(i, j)])
                elif (i, j) in cells:
                    line.append("#")
                else:
                    line.append(".")
            print("".join(line).rstrip())
    for t, st in enumerate(dec.strips):
        print("strip %s: p=%d q=%d shift=%d" % (GLYPHS[t % len(GLYPHS)],
                                                st.p, st.q, dec.shifts[t]))
    return 0


def cmd_schur(args):
    s = _parse_shape(args.shape)
    if args.spec == "classical":
        if args.at is None or args.vars is None:
            raise InputError("classical evaluation needs --vars and --at")
        try:
            xs = [Fraction(tok) for tok in args.at.split(",") if tok]
        except (ValueError, ZeroDivisionError) as e:
            raise InputError("bad --at values: %s" % e)
        if len(xs) != args.vars:
            raise InputError("expected %d values in --at" % args.vars)
        print(schur.classical_value(s, xs))
        return 0
    try:
        p = schur.schur9(s, args.n)
    except ValueError as e:
        raise InputError(str(e))
    print(p)
    return 0


def cmd_random_suite(args):
    ids = tuple(args.ids.split(",")) if args.ids else THEOREM_IDS
    for tid in ids:
        if tid not in THEOREM_IDS:
            raise InputError("unknown theorem id %r" % tid)
    cfg = SuiteConfig(theorem_ids=ids, count=args.count, seed=args.seed,
                      max_size=args.max_size, threads=_threads())
    reports = run_suite(cfg)
    code = _emit(reports, args)
    counts = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    print("suite: %s" % " ".join("%s=%d" % kv for kv in sorted(counts.items())),
          file=sys.stderr)
    return code


def build_parser():
    ap = argparse.ArgumentParser(prog="schurdet")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check one identity on instances")
    v.add_argument("theorem", choices=THEOREM_IDS)
    v.add_argument("--instance", help="instance JSON object")
    v.add_argument("--random", action="store_true")
    v.add_argument("--count", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-size", type=int, default=6)
    v.add_argument("--pretty", action="store_true")
    v.add_argument("--stable", action="store_true",
                   help="zero elapsed fields for byte-stable output")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="cut a shape into border strips")
    d.add_argument("--shape", required=True)
    d.add_argument("--cutting-strip", default="outer",
                   help='"outer", "inner", or JSON cell list')
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decompose)

    r = sub.add_parser("render", help="ASCII Young diagram")
    r.add_argument("--shape", required=True)
    r.add_argument("--contents", action="store_true")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("schur", help="print a Schur polynomial or value")
    s.add_argument("--shape", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--spec", choices=["classical"])
    s.add_argument("--vars", type=int)
    s.add_argument("--at")
    s.set_defaults(func=cmd_schur)

    rs = sub.add_parser("random-suite", help="seeded batch over all identities")
    rs.add_argument("--ids", help="comma-separated theorem ids (default all)")
    rs.add_argument("--count", type=int, default=3)
    rs.add_argument("--seed", type=int, default=0)
    rs.add_argument("--max-size", type=int, default=6)
    rs.add_argument("--pretty", action="store_true")
    rs.add_argument("--stable", action="store_true")
    rs.set_defaults(func=cmd_random_suite)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
