"""Command line interface.

Subcommands: solve (file or stdin to json/tsv/svg), gen (instance
generators to CSV), bench (scaling benchmark with report files), verify
(cross-check the solver against the brute-force reference on random
instances).

Exit codes: 0 success, 1 verify mismatch, 2 input/parse error, 3 unbounded
with --require-bounded, 4 invalid arguments.
"""

from __future__ import annotations

import argparse
import sys

from .bench import run_benchmark
from .generators import gen_fap, gen_omega_m, gen_random
from .geometry import as_exact, rect_area
from .io import ParseError, emit_solution, instance_to_csv, parse_points
from .oracle import check_candidate, oracle_all, oracle_best
from .fastpath import solve
from .solver import solve_all, solve_one


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(4, "%s: error: %s\n" % (self.prog, message))


def _build_parser() -> _Parser:
    p = _Parser(prog="seprect",
                description="largest axis-aligned rectangle around the red "
                            "points with the fewest blue points inside")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", parents=[], help="solve one instance")
    ps.add_argument("--input", "-i", default="-",
                    help="CSV or JSON instance file, - for stdin")
    ps.add_argument("--all", action="store_true",
                    help="report every optimal rectangle")
    ps.add_argument("--format", choices=("json", "tsv", "svg"), default="json")
    ps.add_argument("--output", "-o", default=None, help="write here instead of stdout")
    ps.add_argument("--engine", choices=("auto", "exact", "fast"), default="auto")
    ps.add_argument("--presorted", action="store_true",
                    help="blue points are already sorted by (x, y)")
    ps.add_argument("--require-bounded", action="store_true",
                    help="exit 3 instead of reporting an unbounded solution")

    pg = sub.add_parser("gen", help="generate an instance as CSV")
    pg.add_argument("--kind", choices=("random", "omega-m", "fap"), required=True)
    pg.add_argument("--n", type=int, default=5, help="random: red count")
    pg.add_argument("--m", type=int, default=10,
                    help="random: blue count; omega-m: parameter m (>= 6)")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--range", nargs=2, type=int, default=(-6, 6),
                    metavar=("LO", "HI"), help="random: coordinate range")
    pg.add_argument("--x0", default="1", help="omega-m: half-width (rational)")
    pg.add_argument("--y0", default="1", help="omega-m: half-height (rational)")
    pg.add_argument("--values", default=None,
                    help="fap: comma-separated rationals in [0, 1]")
    pg.add_argument("--output", "-o", default=None)

    pb = sub.add_parser("bench", help="scaling benchmark, writes report files")
    pb.add_argument("--sizes", default="262144,524288,1048576",
                    help="comma-separated blue counts")
    pb.add_argument("--seeds", default="0,1,2")
    pb.add_argument("--n", type=int, default=1000)
    pb.add_argument("--reps", type=int, default=3)
    pb.add_argument("--presorted", action=argparse.BooleanOptionalAction,
                    default=True)
    pb.add_argument("--range", type=int, default=None,
                    help="half-range for coordinates (default scales with m)")
    pb.add_argument("--out-dir", default="bench_out")

    pv = sub.add_parser("verify", help="cross-check solver against brute force")
    pv.add_argument("--count", type=int, default=200)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--n-max", type=int, default=8)
    pv.add_argument("--m-max", type=int, default=16)
    pv.add_argument("--range", nargs=2, type=int, default=(-6, 6),
                    metavar=("LO", "HI"))
    pv.add_argument("--all", action="store_true",
                    help="also compare the full optimum sets")
    return p


def _write_out(text: str, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _cmd_solve(args) -> int:
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as f:
                text = f.read()
    except OSError as e:
        print("seprect: cannot read input: %s" % e, file=sys.stderr)
        return 2
    try:
        inst = parse_points(text)
    except ParseError as e:
        print("seprect: %s" % e, file=sys.stderr)
        return 2
    sol = solve(inst, engine=args.engine, presorted=args.presorted)
    if sol.status == "unbounded" and args.require_bounded:
        print("seprect: unbounded toward %s" %
              ", ".join(sol.unbounded_directions), file=sys.stderr)
        return 3
    rects = None
    if args.all and sol.status == "bounded":
        rects = solve_all(inst)
    _write_out(emit_solution(sol, args.format, all_rects=rects), args.output)
    return 0


def _cmd_gen(args, parser) -> int:
    try:
        if args.kind == "random":
            inst = gen_random(args.n, args.m, args.seed, tuple(args.range))
        elif args.kind == "omega-m":
            inst = gen_omega_m(args.m, as_exact(args.x0), as_exact(args.y0))
        else:
            if not args.values:
                parser.error("--values is required for --kind fap")
            inst = gen_fap([v.strip() for v in args.values.split(",")])
    except (ValueError, TypeError, ZeroDivisionError) as e:
        print("seprect: %s" % e, file=sys.stderr)
        return 4
    _write_out(instance_to_csv(inst), args.output)
    return 0


def _cmd_bench(args) -> int:
    config = {
        "sizes": [int(s) for s in args.sizes.split(",") if s.strip()],
        "seeds": [int(s) for s in args.seeds.split(",") if s.strip()],
        "n": args.n,
        "reps": args.reps,
        "presorted": args.presorted,
        "coordinate_range": args.range,
        "out_dir": args.out_dir,
    }
    report = run_benchmark(config)
    prev = None
    for r in report["results"]:
        ratio = " (x%.2f)" % (r["median_s"] / prev) if prev else ""
        print("m=%-9d median %.4fs%s" % (r["m"], r["median_s"], ratio))
        prev = r["median_s"]
    print("report written to %s/bench.{json,tsv,png}" % args.out_dir)
    return 0


def _cmd_verify(args) -> int:
    import random as _random

    lo, hi = args.range
    for i in range(args.count):
        picker = _random.Random(args.seed * 1000003 + i)
        n = picker.randint(1, max(1, args.n_max))
        m = picker.randint(0, max(0, args.m_max))
        inst = gen_random(n, m, seed=picker.randrange(2 ** 30),
                          coordinate_range=(lo, hi))
        sol = solve_one(inst)
        ref = oracle_best(inst)
        ok = sol.status == ref.status
        if ok and sol.status == "bounded":
            report = check_candidate(sol.best.rect, inst)
            ok = (rect_area(sol.best.rect) == ref.area
                  and report["feasible"] and report["maximal"]
                  and report["open_blue"] == ref.forced_blue)
            if ok and args.all:
                ok = tuple(solve_all(inst)) == tuple(oracle_all(inst))
        if not ok:
            print("mismatch on instance %d:" % i, file=sys.stderr)
            sys.stderr.write(instance_to_csv(inst))
            print("solver: %s  reference: %s" % (sol, ref), file=sys.stderr)
            return 1
    print("verified %d instances against brute force, no mismatches"
          % args.count)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "gen":
            return _cmd_gen(args, parser)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_verify(args)
    except SystemExit as exc:  # argparse exits; keep main() returnable
        return exc.code if isinstance(exc.code, int) else 4


if __name__ == "__main__":
    sys.exit(main())
