from __future__ import annotations

import random

from domlite.cc import CcStrategy, allowed_add_set, on_add, on_remove
from domlite.graph import two_level_neighbors
from domlite.state import new_state
from helpers import (path_graph, random_connected_graph, random_walk,
                     random_weights, star_graph, weighted)


def fresh(g, cc=CcStrategy.TWO_LEVEL):
    return new_state(weighted(g), cc_strategy=cc)


def set_flags(st, value):
    for v in range(st.n):
        st.conf_change[v] = value


# -- on_remove -----------------------------------------------------------------

def test_remove_two_level_reaches_distance_two():
    st = fresh(path_graph(5))
    set_flags(st, 0)
    on_remove(CcStrategy.TWO_LEVEL, st, 2)
    assert list(st.conf_change) == [1, 1, 0, 1, 1]


def test_remove_one_level_stops_at_neighbors():
    st = fresh(path_graph(5))
    set_flags(st, 0)
    on_remove(CcStrategy.ONE_LEVEL, st, 2)
    assert list(st.conf_change) == [0, 1, 0, 1, 0]


def test_remove_disabled_touches_nothing():
    st = fresh(path_graph(5))
    snapshot = bytes(st.conf_change)
    on_remove(CcStrategy.DISABLED, st, 2)
    assert bytes(st.conf_change) == snapshot


# -- on_add --------------------------------------------------------------------

def test_add_two_level_leaves_own_flag_alone():
    st = fresh(path_graph(5))
    set_flags(st, 0)
    on_add(CcStrategy.TWO_LEVEL, st, 0)
    assert list(st.conf_change) == [0, 1, 1, 0, 0]


def test_add_on_star_leaf_flags_center_and_siblings():
    st = fresh(star_graph(3))
    set_flags(st, 0)
    on_add(CcStrategy.TWO_LEVEL, st, 1)
    assert list(st.conf_change) == [1, 0, 1, 1]


def test_add_one_level_flags_neighbors_only():
    st = fresh(star_graph(3))
    set_flags(st, 0)
    on_add(CcStrategy.ONE_LEVEL, st, 1)
    assert list(st.conf_change) == [1, 0, 0, 0]


def test_readding_near_a_frozen_vertex_unfreezes_it():
    # remove the star center (flag drops to 0), then add a leaf: the center
    # sits within two hops of the leaf, so its flag comes back.
    st = fresh(star_graph(3))
    st.add_vertex(0)
    st.remove_vertex(0)
    assert st.conf_change[0] == 0
    st.add_vertex(1)
    assert st.conf_change[0] == 1


# -- allowed_add_set -------------------------------------------------------------

def test_fresh_state_allows_everything():
    st = fresh(path_graph(4))
    assert set(allowed_add_set(st)) == {0, 1, 2, 3}


def test_removed_vertex_is_excluded_until_neighborhood_changes():
    st = fresh(path_graph(4))
    st.add_vertex(1)
    st.remove_vertex(1)
    assert set(allowed_add_set(st)) == {0, 2, 3}


def test_disabled_strategy_allows_all_outside_vertices():
    st = fresh(path_graph(4), cc=CcStrategy.DISABLED)
    st.add_vertex(1)
    st.remove_vertex(1)
    st.add_vertex(0)
    assert set(allowed_add_set(st)) == {1, 2, 3}


# -- touched-set bounds -----------------------------------------------------------

def test_flag_updates_touch_only_the_stated_neighborhoods():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(2, 60)
        g = random_connected_graph(rng, n, extra=rng.randint(0, n))
        st = fresh(g)
        for _ in range(30):
            v = rng.randrange(n)
            before = bytes(st.conf_change)
            hook = on_remove if rng.random() < 0.5 else on_add
            strategy = rng.choice([CcStrategy.TWO_LEVEL, CcStrategy.ONE_LEVEL])
            hook(strategy, st, v)
            touched = {u for u in range(n) if st.conf_change[u] != before[u]}
            if strategy is CcStrategy.TWO_LEVEL:
                allowed = two_level_neighbors(g, v) | {v}
            else:
                allowed = set(g.adj[v]) | {v}
            assert touched <= allowed


# -- one-level set stays inside the two-level set ----------------------------------

def test_one_level_candidates_subset_of_two_level_on_shared_trace():
    rng = random.Random(47)
    for _ in range(3):
        n = rng.randint(20, 80)
        g = random_connected_graph(rng, n, extra=rng.randint(n // 2, 2 * n))
        wg = weighted(g, random_weights(rng, n))
        one = new_state(wg, cc_strategy=CcStrategy.ONE_LEVEL)
        two = new_state(wg, cc_strategy=CcStrategy.TWO_LEVEL)
        for _ in range(2000):
            v = rng.randrange(n)
            if one.in_solution[v]:
                one.remove_vertex(v)
                two.remove_vertex(v)
            else:
                one.add_vertex(v)
                two.add_vertex(v)
            assert bytes(one.in_solution) == bytes(two.in_solution)
            for u in range(n):
                if not one.in_solution[u] and one.conf_change[u]:
                    assert two.conf_change[u] == 1


# -- hook wiring inside state moves -------------------------------------------------

def test_state_moves_apply_the_selected_strategy():
    rng = random.Random(53)
    g = random_connected_graph(rng, 40, extra=40)
    wg = weighted(g, random_weights(rng, 40))
    for strategy in CcStrategy:
        st = new_state(wg, cc_strategy=strategy)
        moves = []
        for _ in range(300):
            v = rng.randrange(40)
            if st.in_solution[v]:
                st.remove_vertex(v)
                moves.append((on_remove, v))
            else:
                st.add_vertex(v)
                moves.append((on_add, v))
        # replay the trace through the bare hooks on a second state
        replay = new_state(wg, cc_strategy=strategy)
        for hook, v in moves:
            hook(strategy, replay, v)
        assert bytes(replay.conf_change) == bytes(st.conf_change)
