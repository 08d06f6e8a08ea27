"""Seeded random connected instance generator.

Structure: a uniform random spanning tree (random choice sequence
decoded into a tree) plus distinct random extra edges up to the
requested count.  Weights follow one of the two benchmark families:
uniform integers in [20, 70], or uniform integers in [1, d(v)^2] drawn
after the structure is final.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graph import Graph, WeightedGraph, WeightScheme, apply_weighting

FAMILIES = ("t1", "t2")


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    family: str = "t1"
    seed: int = 0

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        max_m = self.n * (self.n - 1) // 2
        if not (self.n - 1 <= self.m <= max_m):
            raise ValueError(
                f"edge count {self.m} infeasible for a connected simple graph "
                f"on {self.n} vertices (need {self.n - 1}..{max_m})")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled spanning tree on n vertices."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def generate(spec: GenSpec) -> WeightedGraph:
    """Build the instance for spec; identical specs give identical instances."""
    spec.validate()
    n = spec.n
    rng = random.Random(spec.seed)
    edge_set = {(min(u, v), max(u, v)) for u, v in _random_tree_edges(n, rng)}
    extra = spec.m - len(edge_set)
    max_m = n * (n - 1) // 2
    if spec.m > max_m // 2 and n > 2:
        # dense request: choose among explicit non-edges to avoid
        # rejection stalls
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if (u, v) not in edge_set]
        edge_set.update(rng.sample(non_edges, extra))
    else:
        while extra > 0:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            e = (min(u, v), max(u, v))
            if e not in edge_set:
                edge_set.add(e)
                extra -= 1
    g = Graph.from_edges(n, sorted(edge_set))
    weight_seed = rng.randrange(2 ** 32)
    if spec.family == "t1":
        scheme = WeightScheme.uniform_range(20, 70, seed=weight_seed)
    else:
        # degree-dependent weights must be drawn after the structure is fixed
        scheme = WeightScheme.degree_squared(seed=weight_seed)
    return apply_weighting(g, scheme)


__all__ = ["GenSpec", "generate", "FAMILIES"]
