"""Tiny graph builders and from-scratch checkers shared by the tests.

The recompute helpers re-derive every audited quantity straight from the
definitions (coverage counts, frequency-weighted gain/loss sums) instead
of reusing any incremental bookkeeping, so they cannot share a bug with
the caches they are meant to police.
"""
from __future__ import annotations

import random
from typing import Iterable, Sequence

from domlite.graph import Graph, WeightedGraph
from domlite.state import SearchState


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(n, edges)


def path_graph(k: int) -> Graph:
    return build(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves 1..leaves."""
    return build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(k: int) -> Graph:
    return build(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def edgeless_graph(k: int) -> Graph:
    return build(k, [])


def weighted(g: Graph, weights: Sequence[int] | None = None) -> WeightedGraph:
    if weights is None:
        weights = [1] * g.n
    return WeightedGraph(graph=g, weights=tuple(weights))


def random_connected_graph(rng: random.Random, n: int, extra: int = 0) -> Graph:
    """Random tree via random parent attachment, plus `extra` distinct edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    max_m = n * (n - 1) // 2
    while extra > 0 and len(edges) < max_m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        e = (min(a, b), max(a, b))
        if e not in edges:
            edges.add(e)
            extra -= 1
    return build(n, sorted(edges))


def random_weights(rng: random.Random, n: int, lo: int = 1, hi: int = 100) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(n)]


def brute_cover_counts(g: Graph, members: Iterable[int]) -> list[int]:
    cover = [0] * g.n
    for v in members:
        cover[v] += 1
        for u in g.adj[v]:
            cover[u] += 1
    return cover


def brute_score_numerators(wg: WeightedGraph, members: Iterable[int],
                           freq: Sequence[int]) -> list[int]:
    """Gain/loss numerators recomputed from the definition for every vertex."""
    g = wg.graph
    s = set(members)
    cover = brute_cover_counts(g, s)
    nums = []
    for u in range(g.n):
        closed = (u, *g.adj[u])
        if u in s:
            loss = 0
            for x in closed:
                if cover[x] == 1:
                    doms = {d for d in (x, *g.adj[x]) if d in s}
                    assert doms == {u}, "cover count disagrees with membership"
                    loss += freq[x]
            nums.append(-loss)
        else:
            nums.append(sum(freq[x] for x in closed if cover[x] == 0))
    return nums


def audit_state(st: SearchState) -> None:
    """Assert every cached quantity equals its from-scratch recomputation."""
    wg = st.wg
    g = wg.graph
    members = [v for v in range(g.n) if st.in_solution[v]]
    cover = brute_cover_counts(g, members)
    assert list(st.cover_count) == cover
    assert st.uncovered_count == sum(1 for c in cover if c == 0)
    assert st.solution_weight == sum(wg.weights[v] for v in members)
    assert sorted(st.solution_vertices()) == members
    assert sorted(st.uncovered_vertices()) == [v for v in range(g.n) if cover[v] == 0]
    assert list(st.score_num) == brute_score_numerators(wg, members, list(st.freq))


def random_walk(st: SearchState, rng: random.Random, moves: int,
                bump_prob: float = 0.1) -> None:
    """Drive `moves` random add/remove flips, occasionally bumping frequencies."""
    n = st.n
    for _ in range(moves):
        v = rng.randrange(n)
        if st.in_solution[v]:
            st.remove_vertex(v)
        else:
            st.add_vertex(v)
        if bump_prob and rng.random() < bump_prob:
            st.bump_uncovered_freq()
