"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from oldsets.graph import Graph, build_graph, mask_of


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if all_edges:
        edges = draw(st.lists(st.sampled_from(all_edges), unique=True))
    else:
        edges = []
    return build_graph(n, edges)


@st.composite
def graph_and_subset(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    s = draw(st.integers(0, g.all_mask()))
    return g, s


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


def named_fixture_graphs():
    from oldsets.fixtures import builtin_graph
    from oldsets.graph import path_graph

    return {
        "g11": builtin_graph("g11"),
        "c4": builtin_graph("c4"),
        "c5": builtin_graph("c5"),
        "k4": builtin_graph("k4"),
        "p3": path_graph(3),
    }


def set_of(g: Graph, *labels: str) -> int:
    return mask_of(g.index_of(l) for l in labels)
