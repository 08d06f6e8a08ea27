"""Configuration checking: per-vertex freshness flags that veto stale re-adds.

A vertex may only be added while its flag is set.  The two-level strategy
propagates flag resets across the distance-2 neighborhood; the one-level
strategy only across direct neighbors; the disabled strategy leaves every
vertex permanently allowed.  Flag sweeps write idempotently instead of
materializing the two-level neighborhood.
"""
from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:
    from .state import SearchState


class CcStrategy(Enum):
    TWO_LEVEL = "two-level"
    ONE_LEVEL = "one-level"
    DISABLED = "off"


def on_remove(strategy: CcStrategy, st: SearchState, v: int) -> None:
    """Flag update after v leaves the solution: v is frozen, its
    (one- or two-level) neighborhood is re-allowed."""
    conf = st.conf_change
    adj = st.graph.adj
    if strategy is CcStrategy.TWO_LEVEL:
        for u in adj[v]:
            conf[u] = 1
            for t in adj[u]:
                conf[t] = 1
        conf[v] = 0
    elif strategy is CcStrategy.ONE_LEVEL:
        for u in adj[v]:
            conf[u] = 1
        conf[v] = 0
    # DISABLED: no flag traffic


def on_add(strategy: CcStrategy, st: SearchState, v: int) -> None:
    """Flag update after v enters the solution: the neighborhood is
    re-allowed, v's own flag is left untouched."""
    conf = st.conf_change
    adj = st.graph.adj
    if strategy is CcStrategy.TWO_LEVEL:
        own = conf[v]
        for u in adj[v]:
            conf[u] = 1
            for t in adj[u]:
                conf[t] = 1
        conf[v] = own
    elif strategy is CcStrategy.ONE_LEVEL:
        for u in adj[v]:
            conf[u] = 1


def allowed_add_set(st: SearchState) -> Iterator[int]:
    """Vertices outside the solution whose flag permits adding them.

    Lazily iterated; with the disabled strategy every outside vertex
    qualifies.
    """
    insol = st.in_solution
    if st.cc is CcStrategy.DISABLED:
        return (v for v in range(st.n) if not insol[v])
    conf = st.conf_change
    return (v for v in range(st.n) if not insol[v] and conf[v])


__all__ = ["CcStrategy", "on_remove", "on_add", "allowed_add_set"]
