"""The eight graph transformations: edge add/delete/subdivide/contract,
vertex add/delete, Cartesian product and join.

All operations are pure and return new graphs.  Operations that remove or
merge vertices re-index densely and also return an old-to-new id map.
Product vertices are indexed (a, b) -> a * h.n + b.
"""

from __future__ import annotations

from .graph import Graph, from_edge_list


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Add the edge uv between two distinct non-adjacent vertices."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"endpoint out of range: ({u}, {v}) with n={g.n}")
    if u == v:
        raise ValueError(f"cannot add a loop at vertex {u}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    return from_edge_list(g.n, g.edges() + [(u, v)])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Remove the existing edge uv."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    a, b = min(u, v), max(u, v)
    return from_edge_list(g.n, [e for e in g.edges() if e != (a, b)])


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by a new degree-2 vertex w with edges uw and wv."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    a, b = min(u, v), max(u, v)
    w = g.n
    edges = [e for e in g.edges() if e != (a, b)]
    edges.extend([(u, w), (v, w)])
    return from_edge_list(g.n + 1, edges)


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
    """Merge the endpoints of edge uv into one vertex, without multi-edges.

    The merged vertex sits at the smaller of the two old indices; the result
    is densely re-indexed and the returned map sends every old id (including
    both endpoints) to its new id.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    keep, drop = min(u, v), max(u, v)
    id_map = {old: (old if old < drop else old - 1) for old in range(g.n) if old != drop}
    id_map[drop] = id_map[keep]
    edges = set()
    for x, y in g.edges():
        a, b = id_map[x], id_map[y]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return from_edge_list(g.n - 1, sorted(edges)), id_map


def add_vertex(g: Graph, neighbors: list[int] | tuple[int, ...]) -> Graph:
    """Append a new vertex joined to at least one existing vertex."""
    if len(neighbors) == 0:
        raise ValueError("new vertex needs at least one neighbor")
    if len(set(neighbors)) != len(neighbors):
        raise ValueError(f"duplicate neighbors: {neighbors}")
    for w in neighbors:
        if not 0 <= w < g.n:
            raise ValueError(f"neighbor {w} out of range for n={g.n}")
    new = g.n
    return from_edge_list(g.n + 1, g.edges() + [(w, new) for w in neighbors])


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove vertex v and its incident edges; densely re-index the rest."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    if g.n < 2:
        raise ValueError("deleting the last vertex would leave an empty graph")
    id_map = {old: (old if old < v else old - 1) for old in range(g.n) if old != v}
    edges = [
        (id_map[x], id_map[y]) for x, y in g.edges() if x != v and y != v
    ]
    return from_edge_list(g.n - 1, edges), id_map


def product_index(a: int, b: int, h_n: int) -> int:
    """Index of product vertex (a, b) for a right-hand factor on h_n vertices."""
    return a * h_n + b


def product_coords(idx: int, h_n: int) -> tuple[int, int]:
    """Inverse of product_index."""
    return divmod(idx, h_n)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (a,b) ~ (c,d) iff a==c and b~d, or b==d and a~c."""
    if g.n < 1 or h.n < 1:
        raise ValueError("product operands must be non-empty")
    edges = []
    for a in range(g.n):
        for b, d in h.edges():
            edges.append((product_index(a, b, h.n), product_index(a, d, h.n)))
    for b in range(h.n):
        for a, c in g.edges():
            edges.append((product_index(a, b, h.n), product_index(c, b, h.n)))
    return from_edge_list(g.n * h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between them.

    g keeps ids 0..g.n-1; h is shifted to g.n..g.n+h.n-1.
    """
    if g.n < 1 or h.n < 1:
        raise ValueError("join operands must be non-empty")
    off = g.n
    edges = list(g.edges())
    edges.extend((u + off, v + off) for u, v in h.edges())
    edges.extend((u, w + off) for u in range(g.n) for w in range(h.n))
    return from_edge_list(g.n + h.n, edges)
