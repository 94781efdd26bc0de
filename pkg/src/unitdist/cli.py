"""Command-line entry point wiring every subsystem.

Subcommands: tvalues, arrange, compress, directions, construct, oracle,
verify-all.  All JSON output carries ``"schema": "edgemax/1"``.  Exit codes:
0 success, 1 check failure, 2 usage error, 3 enumeration budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import hypercube, lattice, oracle, planar, tcount, verify
from .directions import DELTA_DEFAULT, check_good, random_good_directions
from .errors import BudgetExceededError, ToleranceAmbiguityError

SCHEMA = "edgemax/1"
MAX_TABLE_ROWS = 10_000_000


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"cannot parse {what}: {text!r}")


def cmd_tvalues(args) -> int:
    start, stop = args.start, args.stop
    if not 1 <= start <= stop:
        raise ValueError(f"need 1 <= from <= to, got {start}..{stop}")
    if stop > tcount.MAX_N:
        raise ValueError(f"to={stop} above the supported range (2**50)")
    if stop - start + 1 > MAX_TABLE_ROWS:
        raise ValueError(f"range longer than {MAX_TABLE_ROWS} rows")
    ns = np.arange(start, stop + 1, dtype=np.int64)
    t = tcount.kernels.t_closed_batch(ns)
    h = np.bitwise_count(ns.astype(np.uint64)).astype(np.int64)
    d = np.frexp((ns - 1).astype(np.float64))[1].astype(np.int64)
    lower_num = ns * (d - 1)
    upper = ns * d
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "T", "H", "lower_num", "lower_den", "upper"])
        for i in range(ns.size):
            writer.writerow([int(ns[i]), int(t[i]), int(h[i]), int(lower_num[i]), 4, int(upper[i])])
    else:
        rows = [
            {
                "n": int(ns[i]),
                "T": int(t[i]),
                "H": int(h[i]),
                "lower_num": int(lower_num[i]),
                "lower_den": 4,
                "upper": int(upper[i]),
            }
            for i in range(ns.size)
        ]
        _emit_json({"schema": SCHEMA, "rows": rows})
    return 0


def _sample_vertices(dim: int, n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    size = 1 << dim
    if n > size:
        raise ValueError(f"cannot sample {n} distinct vertices from 2**{dim}")
    if size <= (1 << 20):
        return rng.choice(size, size=n, replace=False)
    chosen: set[int] = set()
    while len(chosen) < n:
        chosen.update(int(x) for x in rng.integers(0, size, size=n - len(chosen)))
    return np.fromiter(chosen, dtype=np.int64)


def cmd_arrange(args) -> int:
    if args.vertices is not None:
        verts = np.array(_parse_int_list(args.vertices, "--vertices"), dtype=np.int64)
    else:
        verts = _sample_vertices(args.dim, args.random, args.seed)
    v = hypercube.CubeVertexSet(args.dim, verts)
    _, trace = hypercube.total_arrange(v)
    _emit_json({"schema": SCHEMA, **trace.as_dict()})
    return 0


def cmd_compress(args) -> int:
    groups = [g for g in args.points.split(";") if g.strip() != ""]
    pts = [tuple(_parse_int_list(g, "--points")) for g in groups]
    s = lattice.lattice_points(pts)
    input_edges = lattice.lattice_edge_count(s)
    cube = lattice.compress_to_cube(s)
    _emit_json(
        {
            "schema": SCHEMA,
            "input_edges": input_edges,
            "output_dim": cube.dim,
            "output_vertices": cube.indices.tolist(),
            "output_edges": hypercube.edge_count(cube),
        }
    )
    return 0


def cmd_directions(args) -> int:
    ds = random_good_directions(args.d, args.bound, args.seed, delta=args.delta)
    cert = check_good(ds, args.bound, args.delta)
    _emit_json(
        {
            "schema": SCHEMA,
            "angles": list(ds.angles),
            "certificate": {
                "B": cert.bound,
                "delta": cert.delta,
                "verdict": cert.verdict,
                "witness": list(cert.witness) if cert.witness else None,
            },
        }
    )
    return 0


def cmd_construct(args) -> int:
    d = planar.required_dim(args.n)
    ds = random_good_directions(d, 1, args.seed)
    config = planar.build_config(args.n, ds, tol=args.tol)
    report = planar.count_unit_distances(config)
    segments = [
        [config.points[i].tolist(), config.points[j].tolist()] for i, j in report.unit_pairs
    ]
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if args.plot_data:
            writer.writerow(["x1", "y1", "x2", "y2"])
            for (x1, y1), (x2, y2) in segments:
                writer.writerow([x1, y1, x2, y2])
        else:
            writer.writerow(["x", "y"])
            for x, y in config.points.tolist():
                writer.writerow([x, y])
    else:
        out = {
            "schema": SCHEMA,
            "points": config.points.tolist(),
            "unit_pairs": [list(p) for p in report.unit_pairs],
            "count": report.count,
            "T": tcount.t_closed(args.n),
        }
        if args.plot_data:
            out["segments"] = segments
        _emit_json(out)
    return 0


def cmd_oracle(args) -> int:
    if args.domain == "cube":
        res = oracle.cube_max_edges(args.d, args.n, args.budget)
    else:
        extents = _parse_int_list(args.extents, "--extents")
        res = oracle.box_max_edges(extents, args.n, args.budget)
    _emit_json(
        {
            "schema": SCHEMA,
            "domain": res.domain,
            "n": res.n,
            "max_edges": res.max_edges,
            "argmax_example": [list(p) if isinstance(p, tuple) else p for p in res.argmax_example],
            "subsets_examined": res.subsets_examined,
        }
    )
    return 0


def cmd_verify_all(args) -> int:
    report = verify.verify_all(
        max_n=args.max_n,
        seed=args.seed,
        budget=args.budget,
        tol=args.tol,
        arrange_trials=args.arrange_trials,
        compress_trials=args.compress_trials,
    )
    _emit_json(report)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitdist",
        description="Extremal unit-distance counts, constructions, and brute-force checks.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=verify.SEED_DEFAULT)
    common.add_argument("--budget", type=int, default=oracle.BUDGET_DEFAULT)
    common.add_argument("--tol", type=float, default=planar.TOL_DEFAULT)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tvalues", parents=[common], help="emit the T(n)/H(n)/bounds table")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_tvalues)

    p = sub.add_parser("arrange", parents=[common], help="arrange a cube vertex set, emit the trace")
    p.add_argument("--dim", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertices", type=str, help="comma-separated vertex indices")
    group.add_argument("--random", type=int, help="sample this many distinct vertices")
    p.set_defaults(func=cmd_arrange)

    p = sub.add_parser("compress", parents=[common], help="compress lattice points into a cube")
    p.add_argument("--points", type=str, required=True, help='e.g. "0,0;1,0;2,0"')
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("directions", parents=[common], help="sample a certified direction set")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bound", type=int, default=1)
    p.add_argument("--delta", type=float, default=DELTA_DEFAULT)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_directions)

    p = sub.add_parser("construct", parents=[common], help="build an extremal planar configuration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--plot-data", action="store_true", help="emit unit segments instead of points")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", parents=[], help="brute-force edge maximization")
    osub = p.add_subparsers(dest="domain", required=True)
    pc = osub.add_parser("cube", parents=[common])
    pc.add_argument("--d", type=int, required=True)
    pc.add_argument("--n", type=int, required=True)
    pc.set_defaults(func=cmd_oracle, domain="cube")
    pb = osub.add_parser("box", parents=[common])
    pb.add_argument("--extents", type=str, required=True, help='e.g. "2,2"')
    pb.add_argument("--n", type=int, required=True)
    pb.set_defaults(func=cmd_oracle, domain="box")

    p = sub.add_parser("verify-all", parents=[common], help="run the full self-check suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=verify.FORMULA_N_CAP)
    p.add_argument("--arrange-trials", type=int, default=verify.ARRANGE_TRIALS_DEFAULT)
    p.add_argument("--compress-trials", type=int, default=verify.COMPRESS_TRIALS_DEFAULT)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ToleranceAmbiguityError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
