"""Core graph type and the metrics the rest of the package is built on.

Vertices are dense integers 0..n-1.  Graphs are simple (no loops, no
parallel edges) and immutable after construction; derived graphs are new
objects.  Infinite distances and infinite girth use math.inf, which is
deliberately distinct from every natural number and compares correctly.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

INF = math.inf


class Graph:
    """Undirected simple graph with sorted adjacency."""

    __slots__ = ("n", "adj", "_adjsets", "_square")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adjsets = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if v in adjsets[u]:
                raise ValueError(f"parallel edge ({u},{v})")
            adjsets[u].add(v)
            adjsets[v].add(u)
        self.n = n
        self._adjsets = tuple(frozenset(s) for s in adjsets)
        self.adj = tuple(tuple(sorted(s)) for s in adjsets)
        self._square = None

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Return all edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    out.append((u, v))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def max_degree(g: Graph) -> int:
    """Return the maximum vertex degree, 0 for an edgeless graph."""
    return max((len(a) for a in g.adj), default=0)


def is_subcubic(g: Graph) -> bool:
    """Return True when every vertex has degree at most 3."""
    return max_degree(g) <= 3


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Return distances from source by BFS, math.inf when unreachable."""
    dist = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du + 1
                q.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Return the length of a shortest u-v path, math.inf if none."""
    if u == v:
        return 0
    seen = {u}
    q = deque([(u, 0)])
    while q:
        x, d = q.popleft()
        for w in g.adj[x]:
            if w == v:
                return d + 1
            if w not in seen:
                seen.add(w)
                q.append((w, d + 1))
    return INF


def distance_table(g: Graph) -> tuple[tuple[float, ...], ...]:
    """Return the full distance matrix, math.inf for unreachable pairs."""
    return tuple(tuple(bfs_distances(g, s)) for s in range(g.n))


def is_connected(g: Graph) -> bool:
    """Return True when the graph has one component (true for n <= 1)."""
    if g.n <= 1:
        return True
    seen = {0}
    q = deque([0])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == g.n


def components(g: Graph) -> list[list[int]]:
    """Return the vertex sets of the connected components, sorted."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        out.append(sorted(comp))
    return out


def square(g: Graph) -> Graph:
    """Return the square graph: edges between vertices at distance 1 or 2."""
    if g._square is not None:
        return g._square
    edges = []
    for u in range(g.n):
        near = set()
        for w in g.adj[u]:
            near.add(w)
            near.update(g._adjsets[w])
        near.discard(u)
        for v in near:
            if u < v:
                edges.append((u, v))
    sq = Graph(g.n, edges)
    g._square = sq
    return sq


def girth(g: Graph) -> float:
    """Return the length of a shortest cycle, math.inf for a forest.

    Per-source BFS: a non-tree edge (u, v) seen while scanning u closes a
    walk of length dist[u] + dist[v] + 1 through the source.  The walk
    contains a cycle no longer than itself, so the minimum over all
    sources and edges is exactly the girth.
    """
    best = INF
    for s in range(g.n):
        dist = [INF] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best - 1:
                continue
            for w in g.adj[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def m1_m2(g: Graph, v: int) -> tuple[int, int]:
    """Count degree-2 vertices at distance exactly 1 and exactly 2 from v."""
    d1 = set(g.adj[v])
    d2 = set()
    for w in d1:
        d2.update(g._adjsets[w])
    d2 -= d1
    d2.discard(v)
    m1 = sum(1 for w in d1 if len(g.adj[w]) == 2)
    m2 = sum(1 for w in d2 if len(g.adj[w]) == 2)
    return m1, m2


def cut_vertices(g: Graph) -> set[int]:
    """Return the articulation points, via iterative DFS lowpoints."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    for root in range(n):
        if disc[root] != -1:
            continue
        timer = 0
        root_children = 0
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    if u == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def biconnected_components(g: Graph) -> list[set[int]]:
    """Return the vertex sets of the biconnected components (blocks).

    Bridges show up as 2-vertex blocks.  Two vertices lie on a common
    cycle exactly when some block with at least 3 vertices contains both.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        timer = 0
        stack = [(root, -1, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        block = set()
                        while edge_stack:
                            x, y = edge_stack.pop()
                            block.add(x)
                            block.add(y)
                            if (x, y) == (p, u):
                                break
                        if block:
                            blocks.append(block)
    return blocks


def induced_subgraph(g: Graph, keep: Sequence[int]) -> tuple[Graph, list[int]]:
    """Return the induced subgraph on keep plus the old-id lookup.

    The new graph uses ids 0..len(keep)-1; old_ids[new] is the original
    vertex id.
    """
    old_ids = sorted(keep)
    new_of = {v: i for i, v in enumerate(old_ids)}
    edges = []
    for v in old_ids:
        for w in g.adj[v]:
            if w in new_of and v < w:
                edges.append((new_of[v], new_of[w]))
    return Graph(len(old_ids), edges), old_ids


def remove_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Return the graph minus v plus the old-id lookup."""
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def add_vertex(g: Graph, attach_to: Sequence[int]) -> Graph:
    """Return a new graph with one extra vertex joined to attach_to."""
    new = g.n
    edges = g.edges() + [(u, new) for u in attach_to]
    return Graph(g.n + 1, edges)
