"""Benchmark harness: repeated seeded runs, aggregation, CSV/JSON output.

Each (instance, run) pair is an independent unit of work with seed
base+i, so results do not depend on worker count or completion order.
A failing instance becomes a failed row; the rest of the batch
proceeds.
"""
from __future__ import annotations

import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .graph import apply_weighting, complement, load_graph, parse_weight_spec
from .solver import SolverConfig, algo_label, solve


@dataclass(frozen=True)
class RunRecord:
    seed: int
    weight: int
    time_to_best: float
    steps: int


@dataclass(frozen=True)
class RunStats:
    """Aggregate of the runs on one instance (or a failure marker)."""

    instance: str
    algo: str
    runs: int
    min_weight: int | None
    avg_weight: float | None
    sd_weight: float | None
    rtime_best: float | None
    avg_time: float | None
    cutoff: float
    seed0: int
    records: tuple[RunRecord, ...] = ()
    error: str | None = None

    def __post_init__(self) -> None:
        if self.error is None:
            if self.min_weight is None or self.avg_weight is None:
                raise ValueError("successful stats need weights")
            if self.min_weight > self.avg_weight + 1e-9:
                raise ValueError("minimum exceeds average")
            if self.sd_weight is None or self.sd_weight < 0:
                raise ValueError("standard deviation must be non-negative")


@dataclass(frozen=True)
class _Task:
    path: str
    weight_spec: str
    use_complement: bool
    cfg: SolverConfig


def _run_task(task: _Task) -> tuple[str, RunRecord | str]:
    try:
        g = load_graph(task.path)
        if task.use_complement:
            g = complement(g)
        wg = apply_weighting(g, parse_weight_spec(task.weight_spec))
        res = solve(wg, task.cfg)
        return "ok", RunRecord(seed=task.cfg.seed, weight=res.best_weight,
                               time_to_best=res.time_to_best, steps=res.steps)
    except Exception as exc:  # noqa: BLE001 - failures become failed rows
        return "err", f"{type(exc).__name__}: {exc}"


def instance_name(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def aggregate(instance: str, cfg: SolverConfig,
              records: list[RunRecord]) -> RunStats:
    """MIN/AVG/SD over run weights; the reported time belongs to the
    first run that achieved the minimum."""
    weights = [r.weight for r in records]
    min_w = min(weights)
    avg_w = statistics.fmean(weights)
    sd_w = statistics.pstdev(weights)
    rtime = next(r.time_to_best for r in records if r.weight == min_w)
    avg_t = statistics.fmean(r.time_to_best for r in records)
    return RunStats(
        instance=instance, algo=algo_label(cfg), runs=len(records),
        min_weight=min_w, avg_weight=avg_w, sd_weight=sd_w,
        rtime_best=rtime, avg_time=avg_t, cutoff=cfg.cutoff, seed0=cfg.seed,
        records=tuple(records))


def run_bench(instances: list[str], cfg: SolverConfig, runs: int = 10,
              workers: int = 1, weight_spec: str = "mod200",
              use_complement: bool = False) -> list[RunStats]:
    """Run each instance `runs` times with seeds cfg.seed, cfg.seed+1, ...

    Results come back in instance order regardless of worker count.
    """
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    tasks = [
        _Task(path=path, weight_spec=weight_spec, use_complement=use_complement,
              cfg=replace(cfg, seed=cfg.seed + i))
        for path in instances
        for i in range(runs)
    ]
    if workers == 1 or len(tasks) <= 1:
        outcomes = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_task, tasks))
    stats: list[RunStats] = []
    for idx, path in enumerate(instances):
        chunk = outcomes[idx * runs:(idx + 1) * runs]
        name = instance_name(path)
        failures = [payload for kind, payload in chunk if kind == "err"]
        if failures:
            stats.append(RunStats(
                instance=name, algo=algo_label(cfg), runs=0,
                min_weight=None, avg_weight=None, sd_weight=None,
                rtime_best=None, avg_time=None, cutoff=cfg.cutoff,
                seed0=cfg.seed, error=str(failures[0])))
            continue
        records = [payload for _, payload in chunk]
        stats.append(aggregate(name, cfg, records))
    return stats


CSV_HEADER = "instance,algo,runs,min,avg,sd,rtime_best,cutoff,seed0"


def emit_csv(stats: list[RunStats]) -> str:
    """Aggregate rows under a fixed header; weights print as integers,
    averages and times with two decimals."""
    lines = [CSV_HEADER]
    for s in stats:
        if s.error is not None:
            lines.append(
                f"{s.instance},{s.algo},0,n/a,n/a,n/a,n/a,"
                f"{s.cutoff:g},{s.seed0}")
            continue
        lines.append(
            f"{s.instance},{s.algo},{s.runs},{s.min_weight},"
            f"{s.avg_weight:.2f},{s.sd_weight:.2f},{s.rtime_best:.2f},"
            f"{s.cutoff:g},{s.seed0}")
    return "\n".join(lines) + "\n"


def emit_runs_csv(stats: list[RunStats]) -> str:
    """One row per individual run (successful instances only)."""
    lines = ["instance,algo,run,seed,weight,time_to_best"]
    for s in stats:
        for i, r in enumerate(s.records, start=1):
            lines.append(
                f"{s.instance},{s.algo},{i},{r.seed},{r.weight},"
                f"{r.time_to_best:.2f}")
    return "\n".join(lines) + "\n"


def emit_json(stats: list[RunStats]) -> str:
    """Aggregates plus per-run detail, machine-readable."""
    payload = []
    for s in stats:
        entry = {
            "instance": s.instance,
            "algo": s.algo,
            "runs": s.runs,
            "min": s.min_weight,
            "avg": s.avg_weight,
            "sd": s.sd_weight,
            "rtime_best": s.rtime_best,
            "avg_time": s.avg_time,
            "cutoff": s.cutoff,
            "seed0": s.seed0,
            "error": s.error,
            "records": [
                {"seed": r.seed, "weight": r.weight,
                 "time_to_best": r.time_to_best, "steps": r.steps}
                for r in s.records
            ],
        }
        payload.append(entry)
    return json.dumps({"results": payload}, indent=2) + "\n"


__all__ = ["RunRecord", "RunStats", "run_bench", "aggregate",
           "emit_csv", "emit_runs_csv", "emit_json", "instance_name",
           "CSV_HEADER"]
