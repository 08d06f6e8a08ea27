"""Command-line interface: solve, bench, exact, validate, gen."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bench import emit_csv, emit_json, emit_runs_csv, instance_name, run_bench
from .cc import CcStrategy
from .generator import FAMILIES, GenSpec, generate
from .graph import (ParseError, apply_weighting, complement, format_weights,
                    load_graph, parse_weight_spec, to_edge_list)
from .oracle import BudgetExceededError, exact_mwds
from .solver import (ALGO_PRESETS, VALID_SCORES, VALID_TIE_BREAKS,
                     SolverConfig, solve)

DEFAULT_CUTOFF = 10.0
CUTOFF_ENV = "DOMLITE_CUTOFF"


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("instance", help="path to a DIMACS (.clq) or edge-list graph file")
    p.add_argument("--weights", default="mod200", metavar="SPEC",
                   help="mod200 | unit | file:PATH | t1:SEED | t2:SEED "
                        "(default: mod200)")
    p.add_argument("--complement", action="store_true",
                   help="work on the complement graph")


def _add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algo", choices=sorted(ALGO_PRESETS), default="cc2fs")
    p.add_argument("--score", choices=list(VALID_SCORES), default=None,
                   help="override the preset's score function")
    p.add_argument("--cc", choices=[s.value for s in CcStrategy], default=None,
                   help="override the preset's flag strategy")
    p.add_argument("--cutoff", type=float, default=None, metavar="SEC",
                   help=f"wall-clock budget per run (default: ${CUTOFF_ENV} "
                        f"or {DEFAULT_CUTOFF:g})")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tie-break-age", choices=list(VALID_TIE_BREAKS),
                   default="max-elapsed",
                   help="which age wins score ties")
    p.add_argument("--legacy-open-neighborhood", action="store_true",
                   help="legacy scores count open instead of closed neighborhoods")
    p.add_argument("--max-steps", type=int, default=None,
                   help="stop after this many moves (deterministic)")


def _resolve_cutoff(value: float | None) -> float:
    if value is not None:
        return value
    env = os.environ.get(CUTOFF_ENV)
    if env:
        try:
            return float(env)
        except ValueError:
            raise ValueError(f"{CUTOFF_ENV} must be a number, got {env!r}") from None
    return DEFAULT_CUTOFF


def _build_config(args: argparse.Namespace) -> SolverConfig:
    cc_strategy, score, brk = ALGO_PRESETS[args.algo]
    if args.cc is not None:
        cc_strategy = CcStrategy(args.cc)
    if args.score is not None:
        score = args.score
    cfg = SolverConfig(
        cutoff=_resolve_cutoff(args.cutoff),
        seed=args.seed,
        cc=cc_strategy,
        score=score,
        break_on_worse=brk,
        tie_break_age=args.tie_break_age,
        legacy_closed=not args.legacy_open_neighborhood,
        max_steps=args.max_steps,
    )
    cfg.validate()
    return cfg


def _load_weighted(args: argparse.Namespace):
    g = load_graph(args.instance)
    if args.complement:
        g = complement(g)
    return apply_weighting(g, parse_weight_spec(args.weights))


def cmd_solve(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    wg = _load_weighted(args)
    res = solve(wg, cfg)
    ones = [v + 1 for v in res.best_set]
    if args.solution_out:
        with open(args.solution_out, "w", encoding="ascii") as fh:
            fh.write(" ".join(str(v) for v in ones) + "\n")
    if args.format == "json":
        print(json.dumps({
            "instance": instance_name(args.instance),
            "algo": res.algo,
            "weight": res.best_weight,
            "size": len(res.best_set),
            "time_to_best": res.time_to_best,
            "steps": res.steps,
            "iterations": res.iterations,
            "improvements": res.improvements,
            "add_fallbacks": res.add_fallbacks,
            "remove_fallbacks": res.remove_fallbacks,
            "seed": res.seed,
            "solution": ones,
        }, indent=2))
    else:
        print(f"instance={instance_name(args.instance)} algo={res.algo} "
              f"weight={res.best_weight} size={len(res.best_set)} "
              f"time_to_best={res.time_to_best:.2f} steps={res.steps} "
              f"seed={res.seed}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    stats = run_bench(args.instances, cfg, runs=args.runs, workers=args.workers,
                      weight_spec=args.weights, use_complement=args.complement)
    out = emit_json(stats) if args.format == "json" else emit_csv(stats)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if args.per_run:
        with open(args.per_run, "w", encoding="ascii") as fh:
            fh.write(emit_runs_csv(stats))
    return 1 if any(s.error for s in stats) else 0


def cmd_exact(args: argparse.Namespace) -> int:
    wg = _load_weighted(args)
    res = exact_mwds(wg, node_budget=args.node_budget)
    print(f"weight={res.weight} nodes={res.nodes_explored}")
    print("solution: " + " ".join(str(v + 1) for v in res.solution))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    wg = _load_weighted(args)
    with open(args.solution, "r", encoding="ascii") as fh:
        tokens = fh.read().split()
    try:
        ids = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"solution file {args.solution} has a non-integer token") from None
    vertices = set()
    for vid in ids:
        if not 1 <= vid <= wg.n:
            raise ParseError(
                f"solution vertex {vid} out of range 1..{wg.n}")
        vertices.add(vid - 1)
    covered = bytearray(wg.n)
    for v in vertices:
        covered[v] = 1
        for u in wg.graph.adj[v]:
            covered[u] = 1
    uncovered = wg.n - sum(covered)
    if uncovered == 0:
        weight = sum(wg.weights[v] for v in vertices)
        print(f"VALID weight={weight}")
        return 0
    print(f"INVALID uncovered={uncovered}")
    return 1


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(n=args.n, m=args.m, family=args.family, seed=args.seed)
    wg = generate(spec)
    edge_path = args.out
    weight_path = args.out + ".weights"
    with open(edge_path, "w", encoding="ascii") as fh:
        fh.write(to_edge_list(wg.graph))
    with open(weight_path, "w", encoding="ascii") as fh:
        fh.write(format_weights(wg.weights))
    print(f"wrote {edge_path} (n={wg.n}, m={wg.graph.m}) and {weight_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domlite",
        description="Local-search solver and benchmark harness for minimum "
                    "weight dominating set instances.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the solver once on an instance")
    _add_instance_args(p)
    _add_solver_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--solution-out", metavar="PATH",
                   help="write the best solution's 1-based ids to PATH")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="benchmark instances with repeated seeded runs")
    p.add_argument("instances", nargs="+",
                   help="paths to instance files")
    p.add_argument("--weights", default="mod200", metavar="SPEC",
                   help="mod200 | unit | file:PATH | t1:SEED | t2:SEED")
    p.add_argument("--complement", action="store_true",
                   help="work on the complement graphs")
    _add_solver_args(p)
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    p.add_argument("--per-run", metavar="PATH",
                   help="also write one CSV row per individual run to PATH")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("exact", help="prove the optimum of a small instance")
    _add_instance_args(p)
    p.add_argument("--node-budget", type=int, default=5_000_000)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("validate", help="check a solution file against an instance")
    _add_instance_args(p)
    p.add_argument("solution", help="file of whitespace-separated 1-based vertex ids")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate a random connected weighted instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=list(FAMILIES), default="t1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, metavar="PATH",
                   help="edge list goes to PATH, weights to PATH.weights")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
