"""Incremental search state for weighted dominating-set local search.

The state tracks, for every vertex, how many solution members cover it
(closed neighborhoods), a frequency counter that grows while the vertex
stays uncovered, and a cached score numerator so that the gain or loss
of flipping any vertex is available in O(1).  Each add or remove repairs
the caches by touching only the flipped vertex's one- and two-level
neighborhood.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from . import cc as _cc
from .cc import CcStrategy
from .graph import WeightedGraph


@total_ordering
@dataclass(frozen=True, eq=False)
class Score:
    """Exact rational score numerator/denominator (denominator = vertex weight).

    Comparisons cross-multiply integers, so 3/2 vs 2/1 is decided exactly
    rather than through floats.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 1:
            raise ValueError(f"score denominator must be positive, got {self.den}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Score):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __lt__(self, other: "Score") -> bool:
        return self.num * other.den < other.num * self.den

    def as_float(self) -> float:
        return self.num / self.den


class SearchState:
    """Mutable solution-under-construction over a shared immutable graph.

    Single-threaded by design; run one state per benchmark worker.
    """

    __slots__ = (
        "wg", "graph", "weights", "cc", "n",
        "in_solution", "cover_count", "freq", "conf_change",
        "forbid", "forbid_list", "last_flip_step", "step",
        "solution_weight", "score_num",
        "_dominator1", "_s_list", "_s_pos", "_uncov_list", "_uncov_pos",
        "_scan_mark", "_scan_gen", "_flags_all_set",
    )

    def __init__(self, wg: WeightedGraph, cc_strategy: CcStrategy = CcStrategy.TWO_LEVEL):
        g = wg.graph
        n = g.n
        self.wg = wg
        self.graph = g
        self.weights = wg.weights
        self.cc = cc_strategy
        self.n = n
        self.in_solution = bytearray(n)
        self.cover_count = [0] * n
        self.freq = [1] * n
        self.conf_change = bytearray([1]) * n
        self.forbid = bytearray(n)
        self.forbid_list: list[int] = []
        self.last_flip_step = [0] * n
        self.step = 0
        self.solution_weight = 0
        # With an empty solution every vertex is uncovered and every
        # frequency is 1, so each score numerator is the closed degree.
        self.score_num = [len(g.adj[v]) + 1 for v in range(n)]
        self._dominator1 = [-1] * n
        self._s_list: list[int] = []
        self._s_pos = [-1] * n
        self._uncov_list = list(range(n))
        self._uncov_pos = list(range(n))
        # generation-stamped scratch for candidate scans (selection rules)
        self._scan_mark = [0] * n
        self._scan_gen = 0
        # pure additions only raise flags, so hooks are no-ops until the
        # first removal
        self._flags_all_set = True

    # -- read accessors ----------------------------------------------------

    @property
    def uncovered_count(self) -> int:
        return len(self._uncov_list)

    @property
    def solution_size(self) -> int:
        return len(self._s_list)

    def is_dominating(self) -> bool:
        return not self._uncov_list

    def solution_vertices(self) -> list[int]:
        return sorted(self._s_list)

    def uncovered_vertices(self) -> list[int]:
        return sorted(self._uncov_list)

    def score_f(self, u: int) -> Score:
        """Frequency score of u: gain of adding (outside) or loss of
        removing (inside), per unit weight, as an exact rational."""
        return Score(self.score_num[u], self.weights[u])

    def age(self, v: int) -> int:
        """Steps elapsed since v last changed state."""
        return self.step - self.last_flip_step[v]

    def is_forbidden(self, v: int) -> bool:
        return bool(self.forbid[v])

    # -- forbid bookkeeping (tenure lasts until the next clear) -------------

    def mark_forbidden(self, v: int) -> None:
        if not self.forbid[v]:
            self.forbid[v] = 1
            self.forbid_list.append(v)

    def clear_forbidden(self) -> None:
        forbid = self.forbid
        for v in self.forbid_list:
            forbid[v] = 0
        self.forbid_list.clear()

    # -- uncovered-list bookkeeping -----------------------------------------

    def _uncov_discard(self, x: int) -> None:
        lst = self._uncov_list
        pos = self._uncov_pos
        i = pos[x]
        last = lst[-1]
        lst[i] = last
        pos[last] = i
        lst.pop()
        pos[x] = -1

    def _uncov_append(self, x: int) -> None:
        self._uncov_pos[x] = len(self._uncov_list)
        self._uncov_list.append(x)

    # -- moves ---------------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        """Move v into the solution and repair coverage and score caches.

        Touches only N[v] plus, for vertices whose coverage crossed a
        0/1 or 1/2 boundary, their direct neighbors.
        """
        insol = self.in_solution
        if insol[v]:
            raise ValueError(f"vertex {v} is already in the solution")
        adj = self.graph.adj
        cover = self.cover_count
        freq = self.freq
        score = self.score_num
        dom1 = self._dominator1
        insol[v] = 1
        self._s_pos[v] = len(self._s_list)
        self._s_list.append(v)
        newly_covered_sum = 0
        for x in adj[v]:
            c = cover[x]
            cover[x] = c + 1
            if c == 0:
                self._uncov_discard(x)
                fx = freq[x]
                newly_covered_sum += fx
                dom1[x] = v
                for u in adj[x]:
                    if not insol[u]:
                        score[u] -= fx
                # x is uncovered, hence outside the solution
                score[x] -= fx
            elif c == 1:
                # x had a sole dominator which now stops being critical for x
                score[dom1[x]] += freq[x]
        c = cover[v]
        cover[v] = c + 1
        if c == 0:
            self._uncov_discard(v)
            fv = freq[v]
            newly_covered_sum += fv
            dom1[v] = v
            for u in adj[v]:
                if not insol[u]:
                    score[u] -= fv
        elif c == 1:
            score[dom1[v]] += freq[v]
        # v's loss is exactly what it newly covers
        score[v] = -newly_covered_sum
        self.solution_weight += self.weights[v]
        self.step += 1
        self.last_flip_step[v] = self.step
        if not self._flags_all_set:
            _cc.on_add(self.cc, self, v)

    def remove_vertex(self, v: int) -> None:
        """Move v out of the solution and repair coverage and score caches."""
        insol = self.in_solution
        if not insol[v]:
            raise ValueError(f"vertex {v} is not in the solution")
        adj = self.graph.adj
        cover = self.cover_count
        freq = self.freq
        score = self.score_num
        dom1 = self._dominator1
        insol[v] = 0
        s_list = self._s_list
        s_pos = self._s_pos
        i = s_pos[v]
        last = s_list[-1]
        s_list[i] = last
        s_pos[last] = i
        s_list.pop()
        s_pos[v] = -1
        newly_uncovered_sum = 0
        for x in adj[v]:
            c = cover[x] - 1
            cover[x] = c
            if c == 0:
                self._uncov_append(x)
                fx = freq[x]
                newly_uncovered_sum += fx
                for u in adj[x]:
                    if not insol[u]:
                        score[u] += fx
                score[x] += fx
            elif c == 1:
                # exactly one dominator of x remains; find it
                if insol[x]:
                    u0 = x
                else:
                    u0 = -1
                    for u in adj[x]:
                        if insol[u]:
                            u0 = u
                            break
                dom1[x] = u0
                score[u0] -= freq[x]
        c = cover[v] - 1
        cover[v] = c
        if c == 0:
            self._uncov_append(v)
            fv = freq[v]
            newly_uncovered_sum += fv
            for u in adj[v]:
                if not insol[u]:
                    score[u] += fv
        elif c == 1:
            u0 = -1
            for u in adj[v]:
                if insol[u]:
                    u0 = u
                    break
            dom1[v] = u0
            score[u0] -= freq[v]
        # v's gain is exactly what it stopped covering
        score[v] = newly_uncovered_sum
        self.solution_weight -= self.weights[v]
        self.step += 1
        self.last_flip_step[v] = self.step
        self._flags_all_set = False
        _cc.on_remove(self.cc, self, v)

    def bump_uncovered_freq(self) -> None:
        """Increment the frequency of every uncovered vertex and repair the
        affected score numerators (uncovered vertices are never inside the
        solution, so each one raises its non-solution closed neighbors)."""
        insol = self.in_solution
        adj = self.graph.adj
        freq = self.freq
        score = self.score_num
        for x in self._uncov_list:
            freq[x] += 1
            for u in adj[x]:
                if not insol[u]:
                    score[u] += 1
            score[x] += 1


def new_state(wg: WeightedGraph,
              cc_strategy: CcStrategy = CcStrategy.TWO_LEVEL) -> SearchState:
    """Fresh state over wg: empty solution, every vertex uncovered with
    frequency 1, every flag raised, scores consistent with that."""
    return SearchState(wg, cc_strategy)


__all__ = ["Score", "SearchState", "new_state"]
