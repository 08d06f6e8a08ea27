"""Local search for minimum weight dominating sets.

The loop alternates a removal phase and an addition phase.  While the
solution dominates the graph, the incumbent is refreshed and the least
useful member is dropped; otherwise one more member is dropped (skipping
vertices added since the last drop), and vertices are added back, best
score first among those whose freshness flag allows it, until the graph
is dominated again.  Uncovered vertices accumulate frequency after every
addition, which reshapes the score landscape over time.

The break variant differs in two places: the incumbent is refreshed
unconditionally whenever the solution dominates, and the addition phase
stops as soon as the next addition could not beat the incumbent.
"""
from __future__ import annotations

import heapq
import random
import time
from dataclasses import dataclass, replace
from typing import Iterable

from . import oracle as _oracle
from .cc import CcStrategy
from .graph import WeightedGraph
from .scoring import LegacyScoreKind, for_removal_negation, legacy_score
from .state import SearchState, new_state

VALID_SCORES = ("freq", "s1", "s2", "s3", "s4")
VALID_TIE_BREAKS = ("max-elapsed", "min-elapsed")

# --algo presets: (cc strategy, score, break_on_worse)
ALGO_PRESETS: dict[str, tuple[CcStrategy, str, bool]] = {
    "cc2fs": (CcStrategy.TWO_LEVEL, "freq", False),
    "ccfs": (CcStrategy.ONE_LEVEL, "freq", False),
    "cc2fs-break": (CcStrategy.TWO_LEVEL, "freq", True),
}


@dataclass(frozen=True)
class SolverConfig:
    """Everything that shapes a run; two runs with equal configs and
    inputs follow the same trajectory."""

    cutoff: float = 10.0             # wall-clock seconds
    seed: int = 1
    cc: CcStrategy = CcStrategy.TWO_LEVEL
    score: str = "freq"              # freq | s1 | s2 | s3 | s4
    break_on_worse: bool = False
    tie_break_age: str = "max-elapsed"
    legacy_closed: bool = True       # closed neighborhoods in legacy scores
    clock_check_interval: int = 256  # iterations between wall-clock reads
    max_steps: int | None = None     # optional deterministic stop, for tests
    target_weight: int | None = None  # optional early stop at a known value

    def validate(self) -> None:
        if not self.cutoff > 0:
            raise ValueError(f"cutoff must be positive, got {self.cutoff}")
        if self.score not in VALID_SCORES:
            raise ValueError(f"score must be one of {VALID_SCORES}, got {self.score!r}")
        if self.tie_break_age not in VALID_TIE_BREAKS:
            raise ValueError(
                f"tie_break_age must be one of {VALID_TIE_BREAKS}, got {self.tie_break_age!r}")
        if self.clock_check_interval < 1:
            raise ValueError("clock_check_interval must be at least 1")
        if self.max_steps is not None and self.max_steps < 0:
            raise ValueError("max_steps must be non-negative")


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one run, plus enough trace summary to compare runs."""

    best_weight: int
    best_set: tuple[int, ...]
    time_to_best: float
    steps: int
    iterations: int
    improvements: int
    add_fallbacks: int
    remove_fallbacks: int
    seed: int
    algo: str


def algo_label(cfg: SolverConfig) -> str:
    """Short reporting name for a configuration."""
    if cfg.score == "freq":
        base = {
            CcStrategy.TWO_LEVEL: "cc2fs",
            CcStrategy.ONE_LEVEL: "ccfs",
            CcStrategy.DISABLED: "fs",
        }[cfg.cc]
    else:
        prefix = {
            CcStrategy.TWO_LEVEL: "cc2",
            CcStrategy.ONE_LEVEL: "cc1",
            CcStrategy.DISABLED: "nocc",
        }[cfg.cc]
        base = f"{prefix}+{cfg.score}"
    return base + ("-break" if cfg.break_on_worse else "")


def config_for_algo(name: str, **overrides) -> SolverConfig:
    """Build a config from an --algo preset name."""
    try:
        cc_strategy, score, brk = ALGO_PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; choose from {sorted(ALGO_PRESETS)}") from None
    return SolverConfig(cc=cc_strategy, score=score, break_on_worse=brk, **overrides)


# ---------------------------------------------------------------------------
# Construction


def greedy_construct(wg: WeightedGraph, st: SearchState) -> None:
    """Grow a dominating set by repeatedly adding the vertex covering the
    most still-uncovered vertices (ties: smaller weight, then smaller id).

    Requires a fresh state: there, every frequency is 1, so the cached
    score numerator of an outside vertex equals its uncovered count.
    """
    if st.wg is not wg:
        raise ValueError("state was built over a different weighted graph")
    if st.step != 0 or st.solution_size != 0:
        raise ValueError("greedy construction needs a fresh state")
    score = st.score_num
    weights = wg.weights
    heap = [(-score[v], weights[v], v) for v in range(st.n)]
    heapq.heapify(heap)
    insol = st.in_solution
    while st._uncov_list:
        neg_count, w, v = heapq.heappop(heap)
        if insol[v]:
            continue
        current = score[v]
        if -neg_count != current:
            # stale entry: coverage counts only shrink, reinsert and retry
            heapq.heappush(heap, (-current, w, v))
            continue
        st.add_vertex(v)


# ---------------------------------------------------------------------------
# Selection rules


def _pick_removal(st: SearchState, cfg: SolverConfig, rng: random.Random,
                  honor_forbid: bool) -> tuple[int, bool]:
    """Best-scoring solution member to drop; returns (vertex, fell_back).

    Ties on score go to the configured age order, remaining ties to a
    seeded uniform choice.  If every member is forbidden, the forbid
    filter is dropped (safety valve).
    """
    s_list = st._s_list
    if not s_list:
        raise ValueError("cannot select a removal from an empty solution")
    legacy_kind = None if cfg.score == "freq" else LegacyScoreKind(cfg.score)
    prefer_old = cfg.tie_break_age == "max-elapsed"
    score_num = st.score_num
    weights = st.weights
    flips = st.last_flip_step
    forbid = st.forbid if honor_forbid else None
    fell_back = False
    while True:
        best_v = -1
        best_num = 0
        best_den = 1
        best_flip = 0
        tie_count = 0
        for v in s_list:
            if forbid is not None and forbid[v]:
                continue
            if legacy_kind is None:
                num = score_num[v]
                den = weights[v]
            else:
                s = for_removal_negation(legacy_kind, st, v, cfg.legacy_closed)
                num = s.num
                den = s.den
            if best_v < 0:
                take = True
            else:
                diff = num * best_den - best_num * den
                if diff > 0:
                    take = True
                elif diff < 0:
                    take = False
                else:
                    flip = flips[v]
                    if flip != best_flip:
                        take = (flip < best_flip) if prefer_old else (flip > best_flip)
                    else:
                        tie_count += 1
                        take = rng.randrange(tie_count) == 0
                        if take:
                            best_v = v  # same key, keep counters
                        continue
            if take:
                best_v = v
                best_num = num
                best_den = den
                best_flip = flips[v]
                tie_count = 1
        if best_v >= 0:
            return best_v, fell_back
        # every member is forbidden: drop the filter and retry
        forbid = None
        fell_back = True


def _pick_add(st: SearchState, cfg: SolverConfig, rng: random.Random) -> tuple[int, bool]:
    """Best-scoring addition; returns (vertex, fell_back).

    Candidates are the vertices that would cover at least one uncovered
    vertex, filtered by the freshness flag.  If the filter empties the
    pool, it is ignored (safety valve; an uncovered vertex itself always
    covers something, so the unfiltered pool is never empty).
    """
    uncov = st._uncov_list
    if not uncov:
        raise ValueError("no uncovered vertices; nothing to add")
    adj = st.graph.adj
    insol = st.in_solution
    conf = st.conf_change
    use_conf = st.cc is not CcStrategy.DISABLED
    gen = st._scan_gen + 1
    st._scan_gen = gen
    mark = st._scan_mark
    candidates: list[int] = []
    for x in uncov:
        if mark[x] != gen:
            mark[x] = gen
            if not insol[x]:
                candidates.append(x)
        for u in adj[x]:
            if mark[u] != gen:
                mark[u] = gen
                if not insol[u]:
                    candidates.append(u)
    legacy_kind = None if cfg.score == "freq" else LegacyScoreKind(cfg.score)
    prefer_old = cfg.tie_break_age == "max-elapsed"
    score_num = st.score_num
    weights = st.weights
    flips = st.last_flip_step
    fell_back = False
    while True:
        best_v = -1
        best_num = 0
        best_den = 1
        best_flip = 0
        tie_count = 0
        for v in candidates:
            if use_conf and not conf[v]:
                continue
            if legacy_kind is None:
                num = score_num[v]
                den = weights[v]
            else:
                s = legacy_score(legacy_kind, st, v, cfg.legacy_closed)
                num = s.num
                den = s.den
            if best_v < 0:
                take = True
            else:
                diff = num * best_den - best_num * den
                if diff > 0:
                    take = True
                elif diff < 0:
                    take = False
                else:
                    flip = flips[v]
                    if flip != best_flip:
                        take = (flip < best_flip) if prefer_old else (flip > best_flip)
                    else:
                        tie_count += 1
                        take = rng.randrange(tie_count) == 0
                        if take:
                            best_v = v
                        continue
            if take:
                best_v = v
                best_num = num
                best_den = den
                best_flip = flips[v]
                tie_count = 1
        if best_v >= 0:
            return best_v, fell_back
        if not use_conf:
            raise RuntimeError("addition pool unexpectedly empty")
        use_conf = False
        fell_back = True


def select_remove_rule1(st: SearchState, cfg: SolverConfig,
                        rng: random.Random | None = None) -> int:
    """Removal choice while the solution dominates: any member may go."""
    rng = rng if rng is not None else random.Random(cfg.seed)
    return _pick_removal(st, cfg, rng, honor_forbid=False)[0]


def select_remove_rule2(st: SearchState, cfg: SolverConfig,
                        rng: random.Random | None = None) -> int:
    """Removal choice while uncovered vertices exist: recently added
    members (the forbid list) are skipped unless that empties the pool."""
    rng = rng if rng is not None else random.Random(cfg.seed)
    return _pick_removal(st, cfg, rng, honor_forbid=True)[0]


def select_add(st: SearchState, cfg: SolverConfig,
               rng: random.Random | None = None) -> int:
    rng = rng if rng is not None else random.Random(cfg.seed)
    return _pick_add(st, cfg, rng)[0]


# ---------------------------------------------------------------------------
# Main loop


def solve(wg: WeightedGraph, cfg: SolverConfig) -> SolveResult:
    """Run the local search until the cutoff (or optional step/target
    stop) and return the best dominating set seen, validated."""
    cfg.validate()
    if wg.n < 1:
        raise ValueError("graph must have at least one vertex")
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    st = new_state(wg, cfg.cc)
    greedy_construct(wg, st)

    best_set = list(st._s_list)
    best_w = st.solution_weight
    t_best = time.perf_counter() - t0
    iterations = 0
    improvements = 0
    add_fallbacks = 0
    remove_fallbacks = 0

    cutoff = cfg.cutoff
    interval = cfg.clock_check_interval
    max_steps = cfg.max_steps
    target = cfg.target_weight
    break_variant = cfg.break_on_worse
    weights = wg.weights
    countdown = interval

    done = target is not None and best_w <= target
    while not done:
        countdown -= 1
        if countdown <= 0:
            countdown = interval
            if time.perf_counter() - t0 >= cutoff:
                break
        if max_steps is not None and st.step >= max_steps:
            break
        iterations += 1
        if not st._uncov_list:
            w = st.solution_weight
            if w < best_w:
                assert _oracle.validate(wg, st._s_list)
                best_w = w
                best_set = list(st._s_list)
                t_best = time.perf_counter() - t0
                improvements += 1
                if target is not None and best_w <= target:
                    break
            elif break_variant:
                # unconditional incumbent refresh (same weight, newer set)
                best_set = list(st._s_list)
            v, _ = _pick_removal(st, cfg, rng, honor_forbid=False)
            st.remove_vertex(v)
            continue
        if st._s_list:
            v, fb = _pick_removal(st, cfg, rng, honor_forbid=True)
            if fb:
                remove_fallbacks += 1
            st.remove_vertex(v)
        st.clear_forbidden()
        while st._uncov_list:
            u, fb = _pick_add(st, cfg, rng)
            if fb:
                add_fallbacks += 1
            if break_variant and st.solution_weight + weights[u] >= best_w:
                break
            st.add_vertex(u)
            st.mark_forbidden(u)
            st.bump_uncovered_freq()
            if max_steps is not None and st.step >= max_steps:
                break

    final = tuple(sorted(best_set))
    if not _oracle.validate(wg, final):
        raise RuntimeError("internal error: best solution fails validation")
    return SolveResult(
        best_weight=best_w,
        best_set=final,
        time_to_best=t_best,
        steps=st.step,
        iterations=iterations,
        improvements=improvements,
        add_fallbacks=add_fallbacks,
        remove_fallbacks=remove_fallbacks,
        seed=cfg.seed,
        algo=algo_label(cfg),
    )


def solve_variant_matrix(
        wg: WeightedGraph, base_cfg: SolverConfig,
        variants: Iterable[tuple[CcStrategy, str, bool]]) -> list[SolveResult]:
    """Solve once per (cc strategy, score, break) triple, sharing the
    base config's seed and budget so variants are directly comparable."""
    results = []
    for cc_strategy, score, brk in variants:
        cfg = replace(base_cfg, cc=cc_strategy, score=score, break_on_worse=brk)
        results.append(solve(wg, cfg))
    return results


__all__ = [
    "SolverConfig", "SolveResult", "ALGO_PRESETS", "VALID_SCORES",
    "algo_label", "config_for_algo", "greedy_construct",
    "select_remove_rule1", "select_remove_rule2", "select_add",
    "solve", "solve_variant_matrix",
]
