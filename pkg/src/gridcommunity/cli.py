"""Command-line interface.

Subcommands
-----------
partition   run one solver at one k; writes a JSON run report and a DOT graph
sweep       run one solver across a k range; writes a CSV table
benchmark   compare several solvers, r repetitions each; writes a CSV table
weights     export the weight matrices (ECS, admittance, sensitivity, PTDF)

Exit codes: 0 success, 1 input/validation problem, 2 solver failure.
All outputs are reproducible for fixed flags and seed; wall-clock fields are
the only thing that varies between identical runs.
"""
from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from pathlib import Path

from . import __version__
from .errors import (CaseFileError, DegenerateGraphError, GridCommunityError,
                     SingularSystemError, ValidationError)
from .grid import Grid, load_grid
from .modularity import build_modularity_matrix
from .qubo import auto_penalty
from .solvers import (EXHAUSTIVE_CAP, SOLVERS, AnnealParams, solve_partition,
                      sweep_k)
from .weights import build_ecs, compute_ptdf, normalized_weights


class UsageError(Exception):
    """Bad flag combination; maps to exit code 1."""


#: qualitative palette for community coloring in DOT output
_PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)


def partition_dot(grid: Grid, assignment) -> str:
    """Undirected DOT drawing: one node per bus (filled by community),
    one edge per merged branch."""
    lines = ["graph communities {", "  node [shape=circle, style=filled];"]
    for bus in grid.buses:
        color = _PALETTE[int(assignment[bus.id]) % len(_PALETTE)]
        lines.append(f'  {bus.id} [label="{bus.name}", fillcolor="{color}"];')
    for br in grid.branches:
        style = ' [style=dashed]' if br.kind == "transformer" else ""
        lines.append(f"  {br.from_bus} -- {br.to_bus}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write_csv(path: Path, header, rows):
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_triplets(path: Path, matrix, symmetric: bool):
    """Nonzero (row, col, value) triplets; upper triangle when symmetric."""
    rows = []
    n_rows, n_cols = matrix.shape
    for i in range(n_rows):
        for j in range(i + 1 if symmetric else 0, n_cols):
            value = matrix[i, j]
            if value != 0.0:
                rows.append((i, j, repr(float(value))))
    _write_csv(path, ("row", "col", "value"), rows)


def _parse_k_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"--k-range expects A..B, got '{text}'")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"--k-range expects integers: {exc}") from exc
    if lo < 1 or hi < lo:
        raise UsageError(f"--k-range needs 1 <= A <= B, got {text}")
    return list(range(lo, hi + 1))


def _resolve_ks(args, *, required: bool) -> list[int]:
    if getattr(args, "k", None) is not None and getattr(args, "k_range", None):
        raise UsageError("give either -k or --k-range, not both")
    if getattr(args, "k_range", None):
        return _parse_k_range(args.k_range)
    if getattr(args, "k", None) is not None:
        if args.k < 1:
            raise UsageError("k must be >= 1")
        return [args.k]
    if required:
        raise UsageError("one of -k or --k-range is required")
    return []


def _penalty_value(text: str):
    if text == "auto":
        return "auto"
    try:
        value = float(text)
    except ValueError as exc:
        raise UsageError(f"--lambda must be a number or 'auto': {exc}") from exc
    if value <= 0:
        raise UsageError("--lambda must be positive")
    return value


def _anneal_params(args) -> AnnealParams:
    return AnnealParams(num_reads=args.reads, seed=args.seed)


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_partition(args) -> int:
    ks = _resolve_ks(args, required=args.solver != "louvain")
    if args.solver != "louvain" and len(ks) != 1:
        raise UsageError("partition runs a single k; use sweep for ranges")
    k = ks[0] if ks else 0
    grid = load_grid(args.case)
    adj = build_ecs(grid, alpha=args.alpha, beta=args.beta)
    penalty = _penalty_value(args.penalty)
    start = time.perf_counter()
    part = solve_partition(adj, k, args.solver, params=_anneal_params(args),
                           penalty=penalty)
    seconds = time.perf_counter() - start
    if args.solver == "qubo-anneal":
        lam = (auto_penalty(build_modularity_matrix(adj))
               if penalty == "auto" else penalty)
    else:
        lam = None
    report = {
        "case": str(args.case),
        "solver": args.solver,
        "k": part.k if args.solver == "louvain" else k,
        "alpha": args.alpha,
        "beta": args.beta,
        "lambda": lam,
        "partition": [int(c) for c in part.assignment],
        "q_e": part.score,
        "seconds": seconds,
        "seed": args.seed,
        "version": __version__,
    }
    out = _out_dir(args)
    stem = Path(args.case).stem
    tag = (f"{stem}_{args.solver}" if args.solver == "louvain"
           else f"{stem}_{args.solver}_k{k}")
    report_path = out / f"{tag}.json"
    report_path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n",
                           encoding="utf-8")
    dot_path = out / f"{tag}.dot"
    dot_path.write_text(partition_dot(grid, part.assignment), encoding="utf-8")
    print(f"Q_e = {part.score:.4f} with {part.n_communities} communities "
          f"in {seconds:.2f}s -> {report_path}")
    return 0


def cmd_sweep(args) -> int:
    ks = _resolve_ks(args, required=True)
    grid = load_grid(args.case)
    result = sweep_k(grid, ks, solver=args.solver,
                     params=_anneal_params(args), alpha=args.alpha,
                     beta=args.beta, penalty=_penalty_value(args.penalty))
    out = _out_dir(args)
    stem = Path(args.case).stem
    csv_path = out / f"{stem}_{args.solver}_sweep.csv"
    _write_csv(csv_path, ("k", "solver", "q_e", "seconds"),
               [(rec.k, rec.solver, repr(rec.partition.score),
                 f"{rec.seconds:.6f}") for rec in result.records])
    if args.dot:
        for rec in result.records:
            path = out / f"{stem}_{args.solver}_k{rec.k}.dot"
            path.write_text(partition_dot(grid, rec.partition.assignment),
                            encoding="utf-8")
    best = result.best
    print(f"best Q_e = {best.partition.score:.4f} at k={best.k} -> {csv_path}")
    return 0


def cmd_benchmark(args) -> int:
    solvers = [s.strip() for s in args.solver.split(",") if s.strip()]
    if len(solvers) < 2:
        raise UsageError("benchmark compares solvers; give at least two "
                         "(comma-separated)")
    for solver in solvers:
        if solver not in SOLVERS:
            raise UsageError(f"unknown solver '{solver}' (choose from {SOLVERS})")
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    ks = _resolve_ks(args, required=True)
    grid = load_grid(args.case)
    adj = build_ecs(grid, alpha=args.alpha, beta=args.beta)
    penalty = _penalty_value(args.penalty)
    rows = []
    for solver in solvers:
        for k in ks:
            times, scores = [], []
            for rep in range(args.reps):
                params = AnnealParams(num_reads=args.reads,
                                      seed=args.seed + rep)
                start = time.perf_counter()
                part = solve_partition(adj, k, solver, params=params,
                                       penalty=penalty)
                times.append(time.perf_counter() - start)
                scores.append(part.score)
            rows.append((solver, k, repr(max(scores)),
                         f"{statistics.fmean(times):.6f}",
                         f"{statistics.pstdev(times):.6f}"))
    out = _out_dir(args)
    csv_path = out / f"{Path(args.case).stem}_benchmark.csv"
    _write_csv(csv_path, ("solver", "k", "q_e", "seconds_mean", "seconds_std"),
               rows)
    print(f"benchmarked {len(solvers)} solvers x {len(ks)} k values "
          f"({args.reps} reps) -> {csv_path}")
    return 0


def cmd_weights(args) -> int:
    grid = load_grid(args.case)
    adj = build_ecs(grid, alpha=args.alpha, beta=args.beta)
    ybar, cbar = normalized_weights(grid)
    ptdf = compute_ptdf(grid)
    out = _out_dir(args)
    stem = Path(args.case).stem
    _write_triplets(out / f"{stem}_ecs.csv", adj.weights, symmetric=True)
    _write_triplets(out / f"{stem}_admittance.csv", ybar, symmetric=True)
    _write_triplets(out / f"{stem}_sensitivity.csv", cbar, symmetric=True)
    _write_triplets(out / f"{stem}_ptdf.csv", ptdf.values, symmetric=False)
    print(f"wrote 4 weight matrices for {grid.n_buses} buses to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridcommunity",
        description="Partition electrical grids into communities by "
                    "maximizing electrical modularity.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--case", required=True, help="case file (JSON)")
    common.add_argument("--alpha", type=float, default=0.5,
                        help="admittance mixing weight (default 0.5)")
    common.add_argument("--beta", type=float, default=0.5,
                        help="sensitivity mixing weight (default 0.5)")
    common.add_argument("--seed", type=int, default=0,
                        help="annealer seed (default 0)")
    common.add_argument("--reads", type=int, default=1000,
                        help="annealer restarts (default 1000)")
    common.add_argument("--lambda", dest="penalty", default="auto",
                        help="one-hot penalty weight, a number or 'auto'")
    common.add_argument("--out", default=".", help="output directory")

    def add_k(p, with_range=True):
        p.add_argument("-k", type=int, default=None,
                       help="number of communities")
        if with_range:
            p.add_argument("--k-range", default=None, metavar="A..B",
                           help="inclusive range of k values")

    p = sub.add_parser("partition", parents=[common],
                       help="solve one instance and export the result")
    p.add_argument("--solver", choices=SOLVERS, default="discrete-anneal")
    add_k(p, with_range=False)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("sweep", parents=[common],
                       help="solve across a range of k values")
    p.add_argument("--solver", choices=SOLVERS, default="discrete-anneal")
    p.add_argument("--dot", action="store_true",
                   help="also write one DOT drawing per k")
    add_k(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("benchmark", parents=[common],
                       help="compare solvers on wall-clock time and quality")
    p.add_argument("--solver", required=True,
                   help="comma-separated solver list (at least two)")
    p.add_argument("--reps", type=int, default=5,
                   help="repetitions per solver (default 5); repetition r "
                        "uses seed+r")
    add_k(p)
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser("weights", parents=[common],
                       help="export ECS, admittance, sensitivity, and PTDF "
                            "matrices as CSV")
    p.set_defaults(func=cmd_weights)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CaseFileError, ValidationError, DegenerateGraphError,
            SingularSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GridCommunityError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
