"""Classical greedy score functions, kept for ablation runs.

All four score vertices outside the solution by how much uncovered
material their closed neighborhood would pick up, per unit of their own
weight (except the difference form, which is unnormalized).  Removal
variants evaluate the same formula over the coverage a solution member
would lose, negated, mirroring the sign convention of the frequency
score.  Pure functions of (state, vertex); nothing here is cached.
"""
from __future__ import annotations

from enum import Enum

from .state import Score, SearchState


class LegacyScoreKind(Enum):
    S1 = "s1"  # uncovered count / weight
    S2 = "s2"  # uncovered weight sum / weight
    S3 = "s3"  # uncovered weight sum - weight
    S4 = "s4"  # uncovered count * uncovered weight sum / weight


def _gain_terms(st: SearchState, u: int, closed: bool) -> tuple[int, int]:
    """Count and weight sum of the uncovered vertices u would newly cover."""
    cover = st.cover_count
    weights = st.weights
    d = 0
    wsum = 0
    for x in st.graph.adj[u]:
        if cover[x] == 0:
            d += 1
            wsum += weights[x]
    if closed and cover[u] == 0:
        d += 1
        wsum += weights[u]
    return d, wsum


def _loss_terms(st: SearchState, u: int, closed: bool) -> tuple[int, int]:
    """Count and weight sum of the vertices covered by u alone.

    A neighbor with coverage exactly 1 must owe that coverage to u,
    since u is a solution member in its closed neighborhood.
    """
    cover = st.cover_count
    weights = st.weights
    d = 0
    wsum = 0
    for x in st.graph.adj[u]:
        if cover[x] == 1:
            d += 1
            wsum += weights[x]
    if closed and cover[u] == 1:
        d += 1
        wsum += weights[u]
    return d, wsum


def legacy_score(kind: LegacyScoreKind, st: SearchState, u: int,
                 closed: bool = True) -> Score:
    """Score for adding u (must be outside the solution).

    closed=False restores the open-neighborhood reading of the degree
    and weight terms; the default counts u itself when uncovered.
    """
    if st.in_solution[u]:
        raise ValueError(f"vertex {u} is in the solution; legacy_score rates additions")
    d, wsum = _gain_terms(st, u, closed)
    w = st.weights[u]
    if kind is LegacyScoreKind.S1:
        return Score(d, w)
    if kind is LegacyScoreKind.S2:
        return Score(wsum, w)
    if kind is LegacyScoreKind.S3:
        return Score(wsum - w, 1)
    if kind is LegacyScoreKind.S4:
        return Score(d * wsum, w)
    raise ValueError(f"unknown score kind {kind!r}")


def for_removal_negation(kind: LegacyScoreKind, st: SearchState, u: int,
                         closed: bool = True) -> Score:
    """Score for removing u (must be inside the solution): the kind's
    formula over the coverage u alone provides, negated."""
    if not st.in_solution[u]:
        raise ValueError(f"vertex {u} is outside the solution; removal scores rate members")
    d, wsum = _loss_terms(st, u, closed)
    w = st.weights[u]
    if kind is LegacyScoreKind.S1:
        return Score(-d, w)
    if kind is LegacyScoreKind.S2:
        return Score(-wsum, w)
    if kind is LegacyScoreKind.S3:
        return Score(w - wsum, 1)
    if kind is LegacyScoreKind.S4:
        return Score(-(d * wsum), w)
    raise ValueError(f"unknown score kind {kind!r}")


__all__ = ["LegacyScoreKind", "legacy_score", "for_removal_negation"]
