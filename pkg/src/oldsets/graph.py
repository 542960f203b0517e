"""Finite simple undirected graphs over vertex indices 0..n-1.

Adjacency is one int bitmask per vertex, so the set algebra used by the
verifiers (neighborhood intersections, symmetric differences) is plain
``&``/``^``/``|`` on ints.  Vertex subsets are likewise int bitmasks;
``mask_of`` / ``vertices_of`` convert at the API boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "build_graph",
    "mask_of",
    "vertices_of",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "graph_to_json",
    "graph_from_json",
    "graph_from_edge_list",
    "graph_to_edge_list",
    "graph_from_text",
]


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit set per vertex index."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Sorted list of the indices set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Invariants (enforced by :func:`build_graph`): no self-loops, no parallel
    edges, symmetric adjacency.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InputError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def open_neighborhood(self, v: int) -> int:
        """N(v) as a bitmask; never contains v."""
        self.check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        """N[v] = N(v) | {v}."""
        self.check_vertex(v)
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def all_mask(self) -> int:
        """Bitmask of the full vertex set V."""
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (u, v) with u < v."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def label(self, v: int) -> str:
        self.check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, name: str) -> int:
        """Resolve a label (or a decimal index string) to a vertex index."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        try:
            v = int(name)
        except ValueError:
            raise InputError(f"unknown vertex label {name!r}") from None
        self.check_vertex(v)
        return v


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from an edge list, deduplicating repeated edges.

    Raises :class:`InputError` for self-loops, out-of-range endpoints, or a
    label list that does not match ``n`` (or has duplicates).
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) has an endpoint out of range 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise InputError(f"{len(labels)} labels for {n} vertices")
        if len(set(labels)) != n:
            raise InputError("duplicate vertex labels")
    return Graph(n, tuple(adj), labels)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def graph_to_json(g: Graph) -> str:
    d: dict = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    return json.dumps(d, sort_keys=True)


def graph_from_json(text: str) -> Graph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid graph JSON: {exc}") from None
    if not isinstance(d, dict) or "n" not in d or "edges" not in d:
        raise InputError('graph JSON must be an object with "n" and "edges"')
    edges = [tuple(e) for e in d["edges"]]
    for e in edges:
        if len(e) != 2:
            raise InputError(f"bad edge entry {list(e)!r}")
    return build_graph(d["n"], edges, d.get("labels"))


def graph_from_edge_list(text: str) -> Graph:
    """Parse the plain-text format: first line ``n m``, then m lines ``u v``."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError(f'expected header "n m", got {lines[0]!r}')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InputError(f'expected header "n m", got {lines[0]!r}') from None
    if len(lines) - 1 != m:
        raise InputError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"bad edge line {ln!r}") from None
    return build_graph(n, edges)


def graph_to_edge_list(g: Graph) -> str:
    es = g.edges()
    lines = [f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    """Accept either the JSON format or the plain edge-list format."""
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return graph_from_edge_list(text)
