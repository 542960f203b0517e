"""Verifier semantics: spec'd examples, witnesses, and the definitional
equivalences (checked here on small scales; the full sweep lives in the
acceptance module)."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_labeled_graphs, graph_and_subset, set_of
from oldsets.errors import InputError
from oldsets.fixtures import g11
from oldsets.graph import complete_graph, cycle_graph, mask_of, path_graph, vertices_of
from oldsets.verify import (
    distinguishing_count,
    domination_count,
    is_distinguishing_collection,
    is_identifying_code,
    is_locating_dominating,
    is_old,
    is_old_definitional,
    is_old_via_collection,
    is_open_dominating,
    is_red_old,
    is_red_old_definitional,
)

G11_OLD6 = ("v2", "v3", "v6", "v7", "v9", "v10")
G11_RED9 = ("v1", "v2", "v3", "v5", "v6", "v7", "v9", "v10", "v11")


def test_domination_count_examples():
    c5 = cycle_graph(5)
    assert domination_count(c5, c5.all_mask(), 0) == 2
    p3 = path_graph(3)
    assert domination_count(p3, mask_of([1]), 1) == 0  # v never dominates itself
    g = g11()
    assert domination_count(g, set_of(g, *G11_OLD6), g.index_of("v4")) == 2


def test_distinguishing_count_examples():
    k4 = complete_graph(4)
    assert distinguishing_count(k4, k4.all_mask(), 0, 1) == 2
    c5 = cycle_graph(5)
    assert distinguishing_count(c5, c5.all_mask(), 0, 1) == 4
    g = g11()
    assert distinguishing_count(g, set_of(g, *G11_OLD6), g.index_of("v2"), g.index_of("v3")) == 2


def test_distinguishing_count_rejects_equal_vertices():
    c5 = cycle_graph(5)
    with pytest.raises(InputError):
        distinguishing_count(c5, c5.all_mask(), 2, 2)


def test_is_open_dominating_examples():
    c5 = cycle_graph(5)
    assert is_open_dominating(c5, c5.all_mask(), 2).holds
    rep = is_open_dominating(path_graph(3), mask_of([1]), 1)
    assert not rep.holds and rep.vertex == 1 and rep.count == 0
    g = g11()
    assert is_open_dominating(g, set_of(g, *G11_RED9), 2).holds


def test_is_open_dominating_rejects_bad_fold():
    with pytest.raises(InputError):
        is_open_dominating(cycle_graph(5), 0, 0)


def test_is_old_examples():
    g = g11()
    assert is_old(g, set_of(g, *G11_OLD6)).holds
    c4 = cycle_graph(4)
    rep = is_old(c4, c4.all_mask())
    assert not rep.holds and rep.pair == (0, 2) and rep.count == 0  # open twins
    c5 = cycle_graph(5)
    assert is_old(c5, mask_of([0, 1, 2, 3])).holds


def test_old_c5_minimum_by_exhaustion():
    # brute-force oracle: no 3-subset of C5 works, some 4-subset does
    c5 = cycle_graph(5)
    sizes = [s for s in range(1 << 5) if is_old(c5, s).holds]
    assert min(x.bit_count() for x in sizes) == 4
    assert mask_of([0, 1, 2, 3]) in sizes


def test_is_red_old_examples():
    g = g11()
    assert is_red_old(g, set_of(g, *G11_RED9)).holds
    k4 = complete_graph(4)
    assert is_red_old(k4, k4.all_mask()).holds
    for s in itertools.combinations(range(4), 3):
        assert not is_red_old(k4, mask_of(s)).holds
    c5 = cycle_graph(5)
    assert is_red_old(c5, c5.all_mask()).holds
    for s in range(1 << 5):
        if s != c5.all_mask():
            assert not is_red_old(c5, s).holds


def test_is_red_old_definitional_examples():
    g = g11()
    s = set_of(g, *G11_RED9)
    assert is_red_old_definitional(g, s).holds
    # each single-deletion remainder is itself an OLD set
    for v in vertices_of(s):
        assert is_old(g, s & ~(1 << v)).holds
    assert not is_red_old_definitional(path_graph(3), 0).holds


def test_red_old_equivalence_exhaustive_small():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            for s in range(1 << n):
                assert is_red_old(g, s).holds == is_red_old_definitional(g, s).holds


def test_old_three_formulations_exhaustive_small():
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            for s in range(1 << n):
                a = is_old(g, s).holds
                assert a == is_old_definitional(g, s)
                assert a == is_old_via_collection(g, s)


def test_is_distinguishing_collection_examples():
    assert is_distinguishing_collection(2, [mask_of([0]), mask_of([0, 1])])
    assert not is_distinguishing_collection(2, [mask_of([0, 1])])
    g = g11()
    collection = [g.adj[g.index_of(x)] for x in G11_OLD6]
    assert is_distinguishing_collection(g.n, collection)


def test_collection_member_outside_universe_rejected():
    with pytest.raises(InputError):
        is_distinguishing_collection(2, [mask_of([2])])


def test_identifying_code_p3_example():
    # {N[1]} covers P3 but separates no pair
    assert not is_identifying_code(path_graph(3), mask_of([1]))


def test_locating_dominating_k4_example():
    k4 = complete_graph(4)
    assert is_locating_dominating(k4, mask_of([0, 1, 2]))


def _locating_dominating_direct(g, s):
    # classical formulation, used as an independent oracle
    out = [v for v in range(g.n) if not s >> v & 1]
    if any((g.adj[v] & s) == 0 for v in out):
        return False
    codes = [g.adj[v] & s for v in out]
    return len(set(codes)) == len(out)


def _identifying_code_direct(g, s):
    codes = [g.closed_neighborhood(v) & s for v in range(g.n)]
    return all(codes) and len(set(codes)) == g.n


def test_ld_and_ic_against_direct_definitions():
    k4 = complete_graph(4)
    for s in range(1 << 4):
        assert is_locating_dominating(k4, s) == _locating_dominating_direct(k4, s)
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            for s in range(1 << n):
                assert is_locating_dominating(g, s) == _locating_dominating_direct(g, s)
                assert is_identifying_code(g, s) == _identifying_code_direct(g, s)


@given(graph_and_subset())
def test_distinguishing_count_symmetry(gs):
    g, s = gs
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert distinguishing_count(g, s, u, v) == distinguishing_count(g, s, v, u)


@given(graph_and_subset())
@settings(max_examples=60)
def test_monotonicity_under_supersets(gs):
    g, s = gs
    t = s | ((s << 1 | 1) & g.all_mask())  # arbitrary superset
    for v in range(g.n):
        assert domination_count(g, t, v) >= domination_count(g, s, v)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert distinguishing_count(g, t, u, v) >= distinguishing_count(g, s, u, v)
    if is_old(g, s).holds:
        assert is_old(g, t).holds
    if is_red_old(g, s).holds:
        assert is_red_old(g, t).holds


@given(graph_and_subset(), st.integers(1, 2))
@settings(max_examples=60)
def test_disjoint_neighborhoods_shortcut(gs, k):
    # disjoint open neighborhoods make the pair count a sum of dominations
    g, s = gs
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] & g.adj[v]:
                continue
            d = distinguishing_count(g, s, u, v)
            assert d == domination_count(g, s, u) + domination_count(g, s, v)
            if domination_count(g, s, u) >= k and domination_count(g, s, v) >= k:
                assert d >= 2 * k


def test_witness_is_first_failing_pair_in_lex_order():
    c4 = cycle_graph(4)
    rep = is_old(c4, c4.all_mask())
    assert rep.pair == (0, 2)  # (0,1),(0,2),... scanned in order; (0,2) first to fail


def test_out_of_range_set_rejected():
    c5 = cycle_graph(5)
    with pytest.raises(InputError):
        is_old(c5, 1 << 5)
    with pytest.raises(InputError):
        domination_count(c5, -1, 0)
