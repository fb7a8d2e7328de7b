"""Command-line interface: solve, verify, gen and bench.

Exit codes: 0 ok, 1 infeasible (solve --strict) or solver mismatch (verify),
2 input error, 3 capability error.
"""
import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import io
from .arrangement import solve_arrangement, solve_arrangement_instance
from .errors import (DegenerateOverlap, DisconnectedObstacleSubgraph,
                     InvalidInstance, KindMismatch, NonUnitWeights,
                     NotAxisAligned, PointOnObstacle, PointOnSkeleton, SelfLoop,
                     TooLarge, UnsupportedPath, UnsupportedShape)
from .fastpaths import solve_unweighted_fast, solve_weighted_biclique
from .randgen import (random_axis_instance, random_digraph, random_disk_instance,
                      random_segment_instance)
from .reductions import VARIANTS, generate_reduction
from .solvers import (brute_force_solve, solve_unweighted_bfs,
                      solve_unweighted_seidel, solve_weighted)
from .svg import render_svg

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_CAPABILITY = 0, 1, 2, 3

INPUT_ERRORS = (InvalidInstance, PointOnObstacle, PointOnSkeleton,
                DisconnectedObstacleSubgraph, SelfLoop, OSError)
CAPABILITY_ERRORS = (UnsupportedShape, UnsupportedPath, NonUnitWeights,
                     NotAxisAligned, KindMismatch, DegenerateOverlap, TooLarge)

SOLVERS = {
    "dijkstra": solve_weighted,
    "bfs": solve_unweighted_bfs,
    "seidel": solve_unweighted_seidel,
    "si": solve_unweighted_fast,
    "biclique": solve_weighted_biclique,
    "arrangement": solve_arrangement_instance,
}
ALGOS = ("auto",) + tuple(SOLVERS)


class UsageError(Exception):
    pass


def threads() -> int:
    """Worker cap: STSEP_THREADS if set, else the CPU count."""
    cap = os.cpu_count() or 1
    env = os.environ.get("STSEP_THREADS")
    if env:
        try:
            cap = min(cap, max(1, int(env)))
        except ValueError:
            raise UsageError(f"STSEP_THREADS={env!r} is not an integer")
    return cap


def pick_algo(inst) -> str:
    kinds = {"segment" if ob.kind == "polyline" else ob.kind for ob in inst.obstacles}
    unit = all(ob.weight == 1 for ob in inst.obstacles)
    plain_pi = inst.pi is None or tuple(inst.pi) == (inst.s, inst.t)
    if unit and plain_pi and len(kinds) == 1 and kinds <= {"segment", "disk"}:
        return "si"
    return "dijkstra"


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


# ------------------------------------------------------------------ solve

def cmd_solve(args) -> int:
    data = io.load(args.input)
    if io.is_arrangement(data):
        if args.algo not in ("auto", "arrangement"):
            raise UnsupportedShape(f"{args.algo} cannot run on an arrangement file")
        pg, sigma, weights = io.arrangement_from_dict(data)
        t0 = time.perf_counter()
        res = solve_arrangement(pg, sigma, weights)
        ms = 1000 * (time.perf_counter() - t0)
        inst = None
    else:
        inst = io.instance_from_dict(data)
        algo = pick_algo(inst) if args.algo == "auto" else args.algo
        t0 = time.perf_counter()
        res = SOLVERS[algo](inst)
        ms = 1000 * (time.perf_counter() - t0)
    _write(args.output, io.dumps(io.result_to_dict(res, ms)))
    if args.svg:
        if inst is None:
            raise UnsupportedShape("SVG output needs an instance file")
        _write(args.svg, render_svg(inst, res.obstacle_ids))
    if args.strict and not res.feasible:
        return EXIT_INFEASIBLE
    return EXIT_OK


# ----------------------------------------------------------------- verify

def _compare(inst):
    """Per-solver (status, weight) next to the brute-force optimum."""
    ref = brute_force_solve(inst, cap=len(inst.obstacles))
    rows = {"brute-force": ("ref", ref.weight)}
    for name, fn in SOLVERS.items():
        try:
            res = fn(inst)
        except CAPABILITY_ERRORS:
            rows[name] = ("n/a", None)
            continue
        same = (res.feasible, res.weight) == (ref.feasible, ref.weight)
        rows[name] = ("ok" if same else "MISMATCH", res.weight)
    return rows


def _batch_item(job):
    seed, n, weights = job
    return seed, _compare(random_segment_instance(n, seed, weights))


def cmd_verify(args) -> int:
    if args.input:
        inst = io.load_instance(args.input)
        if len(inst.obstacles) > args.max_n:
            raise TooLarge(f"{len(inst.obstacles)} obstacles exceeds --max-n {args.max_n}")
        for ob in inst.obstacles:
            if ob.kind not in ("segment", "polyline"):
                raise UnsupportedShape(f"obstacle {ob.id} is a {ob.kind}")
        rows = _compare(inst)
        print(f"{'algorithm':<12} {'status':<9} weight")
        for name, (status, w) in rows.items():
            print(f"{name:<12} {status:<9} {'-' if w is None else w}")
        return EXIT_INFEASIBLE if any(r[0] == "MISMATCH" for r in rows.values()) else EXIT_OK
    if args.n > args.max_n:
        raise TooLarge(f"--n {args.n} exceeds --max-n {args.max_n}")
    jobs = [(seed, args.n, args.weights) for seed in range(args.seed, args.seed + args.seeds)]
    if threads() > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(threads()) as ex:
            results = list(ex.map(_batch_item, jobs))
    else:
        results = [_batch_item(j) for j in jobs]
    tally = {}
    for seed, rows in results:
        for name, (status, _) in rows.items():
            tally.setdefault(name, {"ok": 0, "MISMATCH": 0, "n/a": 0, "ref": 0})[status] += 1
            if status == "MISMATCH":
                print(f"seed {seed}: {name} disagrees with brute force")
    print(f"{len(jobs)} seeds, n={args.n}, weights={args.weights}")
    print(f"{'algorithm':<12} {'ok':>5} {'mismatch':>9} {'n/a':>5}")
    for name, c in tally.items():
        if name != "brute-force":
            print(f"{name:<12} {c['ok']:>5} {c['MISMATCH']:>9} {c['n/a']:>5}")
    bad = any(c["MISMATCH"] for c in tally.values())
    return EXIT_INFEASIBLE if bad else EXIT_OK


# -------------------------------------------------------------------- gen

def make_random(kind, n, seed, weights):
    if n < 1:
        raise UsageError("--n must be positive")
    if kind == "segments":
        return random_segment_instance(n, seed, weights)
    if kind == "axis":
        return random_segment_instance(n, seed, weights, axis_aligned=True)
    if kind == "grid":
        if weights != "unit":
            raise UsageError("grid instances have unit weights")
        return random_axis_instance(n, seed)
    return random_disk_instance(n, seed, weights, circles=(kind == "circles"))


def cmd_gen(args) -> int:
    if args.what == "random":
        inst = make_random(args.kind, args.n, args.seed, args.weights)
        _write(args.output, io.dumps(io.instance_to_dict(inst)))
        return EXIT_OK
    if args.k < 1:
        raise UsageError("--k must be positive")
    G = io.graph_from_dict(io.load(args.graph))
    out = generate_reduction(G, args.k, args.variant)
    d = io.instance_to_dict(out.instance)
    d["reduction"] = out.meta()
    _write(args.output, io.dumps(d))
    return EXIT_OK


# ------------------------------------------------------------------ bench

def _suite(name, size, rep):
    """(instance, algorithm names) for one benchmark point."""
    if name == "weighted":
        return random_segment_instance(size, rep), ("dijkstra", "biclique", "arrangement")
    if name == "unweighted":
        return random_axis_instance(size, rep), ("si",)
    # size is k for the reduction-based suites
    G = random_digraph(rep, n_max=6, m_max=12)
    inst = generate_reduction(G, size, "segments").instance
    if name == "arrangement":
        return inst, ("arrangement",)
    return inst, ("dijkstra", "biclique")


def growth_exponent(sizes, times) -> float:
    """Least-squares slope of log time against log size."""
    pts = [(s, t) for s, t in zip(sizes, times) if t > 0]
    if len(pts) < 2:
        return float("nan")
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def cmd_bench(args) -> int:
    if args.repeats < 1:
        raise UsageError("--repeats must be at least 1")
    try:
        sizes = [int(x) for x in args.sizes.split(",")]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}")
    if not sizes or min(sizes) < 1:
        raise UsageError("sizes must be positive")
    med = {}
    for size in sizes:
        samples = {}
        for rep in range(args.repeats):
            inst, algos = _suite(args.suite, size, rep)
            for a in algos:
                t0 = time.perf_counter()
                SOLVERS[a](inst)
                samples.setdefault(a, []).append(time.perf_counter() - t0)
        for a, ts in samples.items():
            med.setdefault(a, {})[size] = float(np.median(ts))
    print(f"suite {args.suite}, repeats {args.repeats}")
    print(f"{'algorithm':<12} {'size':>6} {'median_s':>10}")
    report = {"suite": args.suite, "repeats": args.repeats, "results": {}}
    for a, by_size in med.items():
        for size in sizes:
            print(f"{a:<12} {size:>6} {by_size[size]:>10.4f}")
        e = growth_exponent(sizes, [by_size[s] for s in sizes])
        print(f"{a:<12} log-log exponent {e:.2f}")
        report["results"][a] = {"median_s": {str(s): by_size[s] for s in sizes},
                                "exponent": e}
    if args.json:
        _write(args.json, io.dumps(report))
    return EXIT_OK


# ------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stsep", description="minimum-weight s-t point separation")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("solve", help="solve an instance or arrangement file")
    q.add_argument("--input", required=True)
    q.add_argument("--algo", choices=ALGOS, default="auto")
    q.add_argument("--output", default="-")
    q.add_argument("--svg")
    q.add_argument("--strict", action="store_true", help="exit 1 when s and t cannot be separated")
    q.set_defaults(func=cmd_solve)

    q = sub.add_parser("verify", help="compare all solvers against brute force")
    q.add_argument("--input")
    q.add_argument("--max-n", type=int, default=12)
    q.add_argument("--seeds", type=int, default=200)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--n", type=int, default=8)
    q.add_argument("--weights", choices=("rational", "unit"), default="rational")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("gen", help="generate instances")
    q.add_argument("what", choices=("random", "reduce"))
    q.add_argument("--kind", choices=("segments", "axis", "grid", "disks", "circles"),
                   default="segments")
    q.add_argument("--n", type=int, default=8)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--weights", choices=("rational", "unit"), default="rational")
    q.add_argument("--graph")
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--variant", choices=VARIANTS, default="segments")
    q.add_argument("--output", default="-")
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("bench", help="time solvers on growing instances")
    q.add_argument("--suite", choices=("weighted", "unweighted", "arrangement", "reduction"),
                   required=True)
    q.add_argument("--sizes", default="100,200,400")
    q.add_argument("--repeats", type=int, default=3)
    q.add_argument("--json")
    q.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    if args.command == "gen" and args.what == "reduce" and not args.graph:
        print("error: gen reduce needs --graph", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (UsageError, *INPUT_ERRORS) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CAPABILITY_ERRORS as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_CAPABILITY


if __name__ == "__main__":
    sys.exit(main())
