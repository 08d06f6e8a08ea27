"""Reference algorithms for small instances: validation, exhaustive
enumeration, and a branch-and-bound exact solver.

These exist to check the local search, so they favor being obviously
correct over being fast.  The two exact routes are independent of each
other and of the search code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import WeightedGraph


class BudgetExceededError(RuntimeError):
    """The node budget ran out before the search space was exhausted.

    Raised instead of returning a possibly suboptimal answer.
    """


@dataclass(frozen=True)
class ExactResult:
    weight: int
    solution: tuple[int, ...]
    nodes_explored: int


def validate(wg: WeightedGraph, vertices: Iterable[int]) -> bool:
    """True iff every vertex of the graph is in `vertices` or adjacent
    to a member.  Checked directly from the definition."""
    g = wg.graph
    covered = bytearray(g.n)
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
        covered[v] = 1
        for u in g.adj[v]:
            covered[u] = 1
    return all(covered)


def solution_weight(wg: WeightedGraph, vertices: Iterable[int]) -> int:
    return sum(wg.weights[v] for v in set(vertices))


def _closed_masks(wg: WeightedGraph) -> list[int]:
    g = wg.graph
    masks = []
    for v in range(g.n):
        mask = 1 << v
        for u in g.adj[v]:
            mask |= 1 << u
        masks.append(mask)
    return masks


def enumerate_mwds(wg: WeightedGraph) -> ExactResult:
    """Minimum weight dominating set by checking every vertex subset.

    Exponential by construction; refuses graphs beyond 20 vertices.
    """
    n = wg.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > 20:
        raise ValueError(f"enumeration is limited to 20 vertices, got {n}")
    masks = _closed_masks(wg)
    weights = wg.weights
    full = (1 << n) - 1
    best_w = sum(weights) + 1
    best_subset = -1
    for subset in range(1 << n):
        covered = 0
        w = 0
        rest = subset
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            covered |= masks[v]
            w += weights[v]
            rest ^= low
        if covered == full and w < best_w:
            best_w = w
            best_subset = subset
    solution = tuple(v for v in range(n) if best_subset >> v & 1)
    return ExactResult(weight=best_w, solution=solution, nodes_explored=1 << n)


def exact_mwds(wg: WeightedGraph, node_budget: int = 5_000_000) -> ExactResult:
    """Minimum weight dominating set by branch and bound.

    Branches over the dominators of the lowest-numbered uncovered
    vertex, cheapest first; prunes when the current weight plus the
    cheapest way to cover that vertex cannot beat the incumbent.
    Raises BudgetExceededError when node_budget nodes were explored
    without proving optimality.
    """
    n = wg.n
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > 63:
        raise ValueError(f"branch and bound is limited to 63 vertices, got {n}")
    masks = _closed_masks(wg)
    weights = wg.weights
    full = (1 << n) - 1
    # dominators of each vertex, cheapest (then lowest id) first
    dominators = []
    for v in range(n):
        doms = [v] + list(wg.graph.adj[v])
        doms.sort(key=lambda d: (weights[d], d))
        dominators.append(doms)

    best_w = sum(weights)
    best_set: tuple[int, ...] = tuple(range(n))
    nodes = 0
    chosen: list[int] = []

    def descend(covered: int, weight: int) -> None:
        nonlocal best_w, best_set, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(
                f"exceeded node budget of {node_budget} before proving optimality")
        if covered == full:
            if weight < best_w:
                best_w = weight
                best_set = tuple(sorted(chosen))
            return
        # lowest uncovered vertex; every dominating set contains one of
        # its dominators
        x = (~covered & full)
        x = (x & -x).bit_length() - 1
        doms = dominators[x]
        if weight + weights[doms[0]] >= best_w:
            return
        for d in doms:
            if weight + weights[d] >= best_w:
                break  # sorted by weight, the rest are no better
            chosen.append(d)
            descend(covered | masks[d], weight + weights[d])
            chosen.pop()

    descend(0, 0)
    return ExactResult(weight=best_w, solution=best_set, nodes_explored=nodes)


__all__ = ["BudgetExceededError", "ExactResult", "validate",
           "solution_weight", "enumerate_mwds", "exact_mwds"]
