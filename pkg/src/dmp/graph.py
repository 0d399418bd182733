"""Immutable simple undirected graphs with dense integer vertex ids.

Vertices are 0..n-1, adjacency is a tuple of frozensets, so graphs are
hashable values that can be shared freely between workers.  Two text
formats are supported:

* edge-list text: first line ``n m``, then m lines ``u v`` with u < v,
  sorted lexicographically, single spaces, newline-terminated;
* JSON: ``{"n": int, "edges": [[u, v], ...]}`` with the same normalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no multi-edges, symmetric adjacency."""

    n: int
    adj: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]


def from_edge_list(n: int, edges: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Graph:
    """Build a graph from an edge list; duplicates collapse, loops are rejected."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def degree_sequence(g: Graph) -> list[int]:
    """All vertex degrees, sorted non-increasing."""
    return sorted((len(a) for a in g.adj), reverse=True)


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent."""
    for u in range(g.n):
        for v in g.adj[u]:
            if v <= u:
                continue
            if g.adj[u] & g.adj[v]:
                return False
    return True


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_regular(g: Graph) -> bool:
    """True iff all degrees are equal."""
    if g.n == 0:
        raise ValueError("regularity is undefined for the empty graph")
    d = len(g.adj[0])
    return all(len(a) == d for a in g.adj)


def is_tree(g: Graph) -> bool:
    """True iff the graph is connected and acyclic."""
    if g.n == 0:
        raise ValueError("tree check is undefined for the empty graph")
    return g.m == g.n - 1 and is_connected(g)


def to_edge_list_text(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"edge line must be 'u v', got {line!r}") from None
        edges.append((u, v))
    return from_edge_list(n, edges)


def to_json_text(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})


def parse_json_text(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON graph: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('JSON graph must be {"n": int, "edges": [[u, v], ...]}')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ValueError('JSON graph must be {"n": int, "edges": [[u, v], ...]}')
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return from_edge_list(n, pairs)


def parse_graph_text(text: str) -> Graph:
    """Parse either supported format, sniffing JSON by a leading '{'."""
    if text.lstrip().startswith("{"):
        return parse_json_text(text)
    return parse_edge_list_text(text)
