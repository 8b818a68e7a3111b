"""Command-line surface.

Subcommands: btime, centers, max-regret, solve, gen, oracle-check, bench.
Inputs use the tree text format (line 1 ``n rho``, then ``u v lo hi`` per
edge, ``#`` comments, rational ``p/q`` entries pre-scaled to integers).
JSON reports carry ``schema: 1`` and, when rational inputs were scaled,
the ``scale`` factor; all output is byte-stable for fixed inputs, seeds
and flags.

Exit codes: 0 success, 1 oracle-check mismatch (reproducer written),
2 parse/usage errors, 3 invariant violations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import generate
from .broadcast import Scenario, broadcast_centers, btime, btime_all, prime_broadcast_center
from .errors import InvariantViolation, MrbcastError
from .oracle import (REGRET_GUARD, btime_bruteforce, max_regret_bruteforce,
                     minmax_center_bruteforce)
from .scenario_regret import max_regret_fast, max_regret_naive, preprocess_extremes
from .solver import solve, solve_naive
from .tree_core import read_tree_text, write_tree_text

import random


def _load(path: str, rho_override):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise SystemExit(_usage_error(f"cannot read {path}: {exc}"))
    try:
        return read_tree_text(text, rho_override)
    except (ValueError, MrbcastError) as exc:
        raise SystemExit(_usage_error(f"bad tree file {path}: {exc}"))


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(report: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", out)
    elif fmt == "csv":
        rows = report.get("rows")
        if rows is None:
            rows = [[k, report[k]] for k in sorted(report) if k != "schema"]
            text = "\n".join(f"{k},{v}" for k, v in rows) + "\n"
        else:
            text = "\n".join(",".join(str(c) for c in row) for row in rows) + "\n"
        _emit(text, out)
    else:
        lines = [f"{k} = {report[k]}" for k in sorted(report) if k not in ("schema", "rows")]
        _emit("\n".join(lines) + "\n", out)


def _scenario_for(t, which: str) -> Scenario:
    return Scenario.all_hi(t) if which == "hi" else Scenario.all_lo(t)


# ------------------------------------------------------------------ #
# Commands                                                             #
# ------------------------------------------------------------------ #

def cmd_btime(args) -> int:
    t, rho, scale = _load(args.input, args.rho)
    s = _scenario_for(t, args.scenario)
    bt = btime_all(t, s, rho)
    report = {"schema": 1, "command": "btime", "n": t.n, "rho": rho,
              "scenario": args.scenario, "btimes": [int(v) for v in bt],
              "rows": [["vertex", "btime"]] + [[v, int(bt[v])] for v in range(t.n)]}
    if scale != 1:
        report["scale"] = scale
    if args.format != "csv":
        report.pop("rows")
    _dump(report, args.format, args.out)
    return 0


def cmd_centers(args) -> int:
    t, rho, scale = _load(args.input, args.rho)
    s = _scenario_for(t, args.scenario)
    centers = sorted(broadcast_centers(t, s, rho))
    prime = prime_broadcast_center(t, s, rho)
    report = {"schema": 1, "command": "centers", "n": t.n, "rho": rho,
              "scenario": args.scenario, "centers": centers, "prime_center": prime}
    if scale != 1:
        report["scale"] = scale
    _dump(report, args.format, args.out)
    return 0


def _regret_entry(t, rho, x, mode, tables=None):
    entry = {"vertex": x}
    if mode in ("fast", "both"):
        if tables is None:
            tables = preprocess_extremes(t, rho)
        rep = max_regret_fast(t, rho, x, tables)
        entry["fast_max_regret"] = rep.max_regret
    if mode in ("naive", "both"):
        rep = max_regret_naive(t, rho, x)
        entry["naive_max_regret"] = rep.max_regret
    if mode == "both" and entry["fast_max_regret"] != entry["naive_max_regret"]:
        raise InvariantViolation(
            f"naive/fast max_regret disagree at vertex {x}: "
            f"{entry['naive_max_regret']} vs {entry['fast_max_regret']}")
    entry["max_regret"] = rep.max_regret
    ws = rep.worst_scenario
    entry["pivot"] = ws.pivot
    entry["j"] = ws.j
    entry["witness_center"] = rep.witness_center
    sc = ws.materialize(t, rho)
    entry["scenario"] = {str(e): int(w) for e, w in enumerate(sc.weights)}
    return entry


def cmd_max_regret(args) -> int:
    t, rho, scale = _load(args.input, args.rho)
    if args.vertex is None and not args.all:
        return _usage_error("max-regret needs --vertex V or --all")
    report = {"schema": 1, "command": "max-regret", "n": t.n, "rho": rho,
              "mode": args.mode}
    if scale != 1:
        report["scale"] = scale
    try:
        tables = preprocess_extremes(t, rho) if args.mode != "naive" else None
        if args.all:
            report["entries"] = [_regret_entry(t, rho, x, args.mode, tables)
                                 for x in range(t.n)]
        else:
            report.update(_regret_entry(t, rho, int(args.vertex), args.mode,
                                        tables))
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 3
    _dump(report, args.format, args.out)
    return 0


def cmd_solve(args) -> int:
    t, rho, scale = _load(args.input, args.rho)
    report = {"schema": 1, "command": "solve", "n": t.n, "rho": rho,
              "mode": args.mode}
    if scale != 1:
        report["scale"] = scale
    try:
        if args.mode in ("fast", "both"):
            res = solve(t, rho)
            report.update(center=res.center, max_regret=res.max_regret,
                          iterations=res.iterations,
                          trace=[list(row) for row in res.trace],
                          fast_max_regret=res.max_regret)
        if args.mode in ("naive", "both"):
            res_n = solve_naive(t, rho)
            report["naive_max_regret"] = res_n.max_regret
            report["profile"] = list(res_n.profile)
            if args.mode == "naive":
                report.update(center=res_n.center, max_regret=res_n.max_regret,
                              iterations=res_n.iterations, trace=[])
        if args.mode == "both" and report["fast_max_regret"] != report["naive_max_regret"]:
            raise InvariantViolation(
                f"solve naive/fast max_regret disagree: "
                f"{report['naive_max_regret']} vs {report['fast_max_regret']}")
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 3
    _dump(report, args.format, args.out)
    return 0


def cmd_gen(args) -> int:
    try:
        t = generate.random_instance(args.n, args.seed, args.wmin, args.wmax,
                                     args.shape)
    except MrbcastError as exc:
        return _usage_error(str(exc))
    _emit(write_tree_text(t, args.rho), args.out)
    return 0


# ------------------------------------------------------------------ #
# Oracle battery                                                       #
# ------------------------------------------------------------------ #

def _oracle_case(case) -> tuple:
    """One battery instance; returns (index, failure dict or None)."""
    idx, seed, nmin, nmax, rhos = case
    rng = random.Random(seed * 1_000_003 + idx)
    n = rng.randint(nmin, nmax)
    rho = rhos[idx % len(rhos)]
    t = generate.random_instance(n, seed=rng.randrange(2**32))
    x = rng.randrange(n)

    def fail(kind, expected, got):
        return {"instance": idx, "kind": kind, "n": n, "rho": rho, "x": x,
                "expected": expected, "got": got,
                "tree": write_tree_text(t, rho)}

    if n <= 7:
        s = Scenario.from_bits(t, rng.getrandbits(max(n - 1, 1)))
        v = rng.randrange(n)
        dp = btime(t, s, rho, v)
        bf = btime_bruteforce(t, s, rho, v)
        if dp != bf:
            return idx, fail("btime-vs-permutations", bf, dp)
    tables = preprocess_extremes(t, rho)
    fast = max_regret_fast(t, rho, x, tables).max_regret
    naive = max_regret_naive(t, rho, x).max_regret
    if fast != naive:
        return idx, fail("naive-vs-fast-regret", naive, fast)
    if n <= REGRET_GUARD - 1:
        brute = max_regret_bruteforce(t, rho, x)
        if fast != brute:
            return idx, fail("regret-vs-extremal-brute", brute, fast)
        center, value = minmax_center_bruteforce(t, rho)
        res = solve(t, rho, tables)
        if res.max_regret != value:
            return idx, fail("solve-vs-brute-argmin", value, res.max_regret)
    else:
        res = solve(t, rho, tables)
        res_n = solve_naive(t, rho)
        if res.max_regret != res_n.max_regret:
            return idx, fail("solve-vs-naive-argmin", res_n.max_regret,
                             res.max_regret)
    return idx, None


def cmd_oracle_check(args) -> int:
    if args.count < 1 or args.nmin < 1 or args.nmax < args.nmin:
        return _usage_error("oracle-check needs count >= 1 and 1 <= nmin <= nmax")
    try:
        rhos = [int(r) for r in args.rhos.split(",") if r != ""]
    except ValueError:
        return _usage_error(f"bad --rhos {args.rhos!r}")
    if not rhos or any(r < 0 for r in rhos):
        return _usage_error(f"bad --rhos {args.rhos!r}")
    cases = [(i, args.seed, args.nmin, args.nmax, tuple(rhos))
             for i in range(args.count)]
    workers = int(os.environ.get("MBR_THREADS", "1") or "1")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_oracle_case, cases))
    else:
        results = [_oracle_case(c) for c in cases]
    results.sort(key=lambda r: r[0])
    failures = [f for _, f in results if f is not None]
    print(f"oracle-check: {args.count - len(failures)}/{args.count} instances ok "
          f"(n in [{args.nmin}, {args.nmax}], rhos {rhos})")
    if failures:
        path = args.out or "mrbcast-reproducer.json"
        with open(path, "w") as fh:
            json.dump(failures[0], fh, sort_keys=True, indent=2)
        print(f"FAIL: first mismatch {failures[0]['kind']} "
              f"(instance {failures[0]['instance']}); reproducer at {path}")
        return 1
    print("OK")
    return 0


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s != ""]
    except ValueError:
        return _usage_error(f"bad --sizes {args.sizes!r}")
    if not sizes or any(s < 1 for s in sizes):
        return _usage_error(f"bad --sizes {args.sizes!r}")
    modes = ["naive", "fast", "solve"] if args.mode == "both" else [args.mode]
    rows = [["n", "mode", "rep", "micros"]]
    for n in sizes:
        t = generate.random_instance(n, seed=args.seed)
        x = n // 2
        for mode in modes:
            for rep in range(args.reps):
                t0 = time.perf_counter_ns()
                if mode == "naive":
                    max_regret_naive(t, args.rho, x)
                elif mode == "fast":
                    tables = preprocess_extremes(t, args.rho)
                    max_regret_fast(t, args.rho, x, tables)
                else:
                    solve(t, args.rho)
                rows.append([n, mode, rep, (time.perf_counter_ns() - t0) // 1000])
    _emit("\n".join(",".join(str(c) for c in row) for row in rows) + "\n", args.out)
    return 0


# ------------------------------------------------------------------ #

def _add_io_flags(p, fmt=True):
    p.add_argument("--rho", default=None, help="override the file's rho (int or p/q)")
    if fmt:
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mrbcast",
                                 description="Minmax-regret broadcast centers "
                                             "on trees under the postal model")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("btime", help="per-vertex broadcast times under an extreme scenario")
    p.add_argument("input")
    p.add_argument("--scenario", choices=["lo", "hi"], default="hi")
    _add_io_flags(p)
    p.set_defaults(func=cmd_btime)

    p = sub.add_parser("centers", help="broadcast centers and the prime center")
    p.add_argument("input")
    p.add_argument("--scenario", choices=["lo", "hi"], default="hi")
    _add_io_flags(p)
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("max-regret", help="maximum regret of one or all vertices")
    p.add_argument("input")
    p.add_argument("--vertex", type=int, default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--mode", choices=["naive", "fast", "both"], default="fast")
    _add_io_flags(p)
    p.set_defaults(func=cmd_max_regret)

    p = sub.add_parser("solve", help="minmax-regret broadcast center")
    p.add_argument("input")
    p.add_argument("--mode", choices=["naive", "fast", "both"], default="fast")
    _add_io_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a seeded instance file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", choices=list(generate.SHAPES), default="random")
    p.add_argument("--wmin", type=int, default=0)
    p.add_argument("--wmax", type=int, default=9)
    p.add_argument("--rho", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-check", help="randomized equivalence battery")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--nmin", type=int, default=2)
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--rhos", default="0,1,3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="reproducer path on failure")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("bench", help="timing table (CSV: n,mode,rep,micros)")
    p.add_argument("--sizes", default="500,1000,2000")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--mode", choices=["naive", "fast", "solve", "both"], default="both")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rho", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 3
    except MrbcastError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
