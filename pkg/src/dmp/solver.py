"""Exact computation of the longest degree-monotone path parameter mp(G).

A path is degree monotone when the host-graph degrees along it are
non-decreasing or non-increasing; mp(G) counts the vertices of a longest
such path.  Three routes are provided:

* ``mp_exact``      branch and bound, exact for any graph, with a witness;
* ``mp_oracle``     exhaustive dynamic program over (vertex set, endpoint)
                    states, for independent verification on small graphs;
* ``mp_dag_fast_path``  polynomial special case when no edge joins two
                    vertices of equal degree.

Only non-decreasing paths are searched by the solver: reversing a
non-increasing path yields a non-decreasing one, so the two maxima agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


class BudgetExceededError(RuntimeError):
    """Search node budget exhausted; the instance is too large, no value is returned."""


@dataclass(frozen=True)
class SearchLimits:
    node_budget: int = 50_000_000


@dataclass(frozen=True)
class MonotonePath:
    vertices: tuple[int, ...]
    direction: str  # "non-decreasing" or "non-increasing"


@dataclass(frozen=True)
class MpResult:
    value: int
    witness: MonotonePath
    method: str  # "branch-and-bound", "dag-fast-path" or "oracle"


def is_degree_monotone(g: Graph, vertices: list[int] | tuple[int, ...]) -> bool:
    """Check that ``vertices`` is a path with monotone degrees; singletons pass."""
    if len(vertices) == 0:
        raise ValueError("empty vertex list")
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertices in path")
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    for a, b in zip(vertices, vertices[1:]):
        if b not in g.adj[a]:
            return False
    degs = [len(g.adj[v]) for v in vertices]
    non_decr = all(a <= b for a, b in zip(degs, degs[1:]))
    non_incr = all(a >= b for a, b in zip(degs, degs[1:]))
    return non_decr or non_incr


def mp_exact(g: Graph, limits: SearchLimits | None = None) -> MpResult:
    """Exact mp(G) by branch and bound over non-decreasing paths.

    Start vertices are tried in ascending (degree, id) order and extensions
    in ascending id order, so the result is deterministic.  The optimistic
    bound for a partial path is its length plus the number of unvisited
    vertices whose degree is at least the endpoint's degree; a branch is cut
    when that bound cannot beat the best path found so far.

    Raises BudgetExceededError when the node budget runs out; a wrong value
    is never returned.
    """
    if g.n < 1:
        raise ValueError("mp is undefined for the empty graph")
    if limits is None:
        limits = SearchLimits()
    n = g.n
    deg = [len(a) for a in g.adj]

    # neighbors that can extend a non-decreasing path, ascending id
    up_nbrs = [sorted(w for w in g.adj[v] if deg[w] >= deg[v]) for v in range(n)]

    max_deg = max(deg)
    # total_ge[d] = number of vertices with degree >= d
    total_ge = [0] * (max_deg + 2)
    for d in deg:
        total_ge[d] += 1
    for d in range(max_deg - 1, -1, -1):
        total_ge[d] += total_ge[d + 1]

    visited = [False] * n
    visited_by_deg = [0] * (max_deg + 2)
    path: list[int] = []
    best_len = 0
    best_path: tuple[int, ...] = ()
    nodes = 0
    budget = limits.node_budget

    def unvisited_ge(d: int) -> int:
        return total_ge[d] - sum(visited_by_deg[d:])

    def extend(v: int) -> None:
        nonlocal best_len, best_path, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"node budget {budget} exceeded at path length {len(path)}"
            )
        visited[v] = True
        visited_by_deg[deg[v]] += 1
        path.append(v)
        if len(path) > best_len:
            best_len = len(path)
            best_path = tuple(path)
        if len(path) + unvisited_ge(deg[v]) > best_len:
            for w in up_nbrs[v]:
                if not visited[w]:
                    extend(w)
        path.pop()
        visited_by_deg[deg[v]] -= 1
        visited[v] = False

    for v in sorted(range(n), key=lambda x: (deg[x], x)):
        # a start at v can reach at most total_ge[deg[v]] vertices
        if total_ge[deg[v]] > best_len:
            extend(v)

    return MpResult(
        value=best_len,
        witness=MonotonePath(best_path, "non-decreasing"),
        method="branch-and-bound",
    )


def mp_oracle(g: Graph, max_n: int = 12) -> int:
    """mp(G) by exhaustive dynamic programming, independent of mp_exact.

    Every (visited set, endpoint) state reachable by a monotone path is
    enumerated, with non-decreasing and non-increasing paths handled by two
    separate passes; there is no bounding, no ordering heuristic and no
    reversal argument.  Feasible only for small graphs, hence the guard.
    """
    if g.n < 1:
        raise ValueError("mp is undefined for the empty graph")
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, oracle limit is {max_n}")
    n = g.n
    deg = [len(a) for a in g.adj]
    best = 1
    for upward in (True, False):
        allowed = []
        for v in range(n):
            mask = 0
            for w in g.adj[v]:
                if (deg[w] >= deg[v]) if upward else (deg[w] <= deg[v]):
                    mask |= 1 << w
            allowed.append(mask)
        # states[mask] = bitset of endpoints of monotone paths visiting mask
        states = [0] * (1 << n)
        for v in range(n):
            states[1 << v] = 1 << v
        for mask in range(1, 1 << n):
            ends = states[mask]
            if not ends:
                continue
            size = bin(mask).count("1")
            if size > best:
                best = size
            rest = ends
            while rest:
                low = rest & -rest
                end = low.bit_length() - 1
                rest ^= low
                ext = allowed[end] & ~mask
                while ext:
                    lowx = ext & -ext
                    ext ^= lowx
                    states[mask | lowx] |= lowx
    return best


def degree_orientation_is_acyclic(g: Graph) -> bool:
    """True iff no edge joins two vertices of equal degree."""
    deg = [len(a) for a in g.adj]
    return all(deg[u] != deg[v] for u, v in g.edges())


def mp_dag_fast_path(g: Graph) -> MpResult | None:
    """Polynomial mp(G) when the degree orientation is acyclic, else None.

    Orienting every edge from its lower-degree endpoint to its higher-degree
    endpoint yields a DAG exactly when no edge joins equal degrees; a longest
    directed path in that DAG is a longest degree-monotone path.
    """
    if g.n < 1:
        raise ValueError("mp is undefined for the empty graph")
    if not degree_orientation_is_acyclic(g):
        return None
    n = g.n
    deg = [len(a) for a in g.adj]
    order = sorted(range(n), key=lambda v: (deg[v], v))  # valid topological order
    dist = [1] * n
    pred: list[int | None] = [None] * n
    for v in order:
        for w in sorted(g.adj[v]):
            if deg[w] > deg[v] and dist[v] + 1 > dist[w]:
                dist[w] = dist[v] + 1
                pred[w] = v
    end = min(range(n), key=lambda v: (-dist[v], v))
    chain: list[int] = []
    cur: int | None = end
    while cur is not None:
        chain.append(cur)
        cur = pred[cur]
    chain.reverse()
    return MpResult(
        value=dist[end],
        witness=MonotonePath(tuple(chain), "non-decreasing"),
        method="dag-fast-path",
    )
