"""Corpus generation: exhaustive small in-class graphs, random instances,
and named fixtures.

The enumeration grows connected graphs one vertex at a time.  Attaching
a new vertex to a set S creates cycles of length dist(s, s') + 2 only,
so requiring pairwise distance >= min_girth - 2 inside S preserves the
girth bound exactly, and removing any non-cut vertex of an in-class
graph lands back in the class, which makes the augmentation complete.
Isomorph rejection uses a canonical adjacency code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import networkx as nx

from .errors import BudgetExceeded, GenerationFailed, UnknownName
from .graph_core import (
    INF,
    Graph,
    add_vertex,
    bfs_distances,
    cut_vertices,
    distance,
    girth,
    is_connected,
    is_subcubic,
)
from .planar_embed import RotationSystem, find_planar_embedding

ENUMERATION_BUDGET = 14

# Any graph with at most 8 edges is planar; the smallest non-planar
# graph has 9.
_ALWAYS_PLANAR_EDGES = 8


@dataclass(frozen=True)
class GeneratorSpec:
    max_n: int
    min_girth: float = 6
    connectivity: bool = True
    seed: int = 0

    def validate(self) -> None:
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.min_girth != INF and (self.min_girth < 3 or self.min_girth != int(self.min_girth)):
            raise ValueError("min_girth must be an integer >= 3, or infinite")


def canonical_code(g: Graph) -> tuple:
    """Isomorphism-invariant code: the lexicographically greatest
    placement of the upper-triangle adjacency bits.

    Placing vertex k contributes k bits (adjacency to the k already
    placed vertices); codes compare level by level, so prefixes that
    fall strictly behind the best sequence can be dropped.  All tied
    prefixes are kept, which makes the maximum exact.
    """
    n = g.n
    if n == 0:
        return (0, ())
    frontier = [((v,), {v: 0}) for v in range(n)]
    levels: list[int] = []
    for k in range(1, n):
        best_val = -1
        best: list = []
        for prefix, pos in frontier:
            cands = {u for v in prefix for u in g.adj[v] if u not in pos}
            if not cands:
                cands = {u for u in range(n) if u not in pos}
            top = k - 1
            for cand in sorted(cands):
                val = 0
                for w in g.adj[cand]:
                    i = pos.get(w)
                    if i is not None:
                        val |= 1 << (top - i)
                if val > best_val:
                    best_val = val
                    best = [(prefix, pos, cand)]
                elif val == best_val:
                    best.append((prefix, pos, cand))
        frontier = []
        for prefix, pos, cand in best:
            pos2 = dict(pos)
            pos2[cand] = k
            frontier.append((prefix + (cand,), pos2))
        levels.append(best_val)
    return (n, tuple(levels))


def _attach_sets(g: Graph, min_girth: float) -> Iterator[tuple]:
    """Vertex sets a new vertex may attach to without breaking the class."""
    open_vertices = [v for v in range(g.n) if g.degree(v) < 3]
    for v in open_vertices:
        yield (v,)
    if min_girth == INF:
        return
    need = int(min_girth) - 2
    dists = {v: bfs_distances(g, v) for v in open_vertices}
    for size in (2, 3):
        for S in combinations(open_vertices, size):
            if all(dists[u][w] >= need for u, w in combinations(S, 2)):
                yield S


def _enumerate_connected(max_n: int, min_girth: float) -> list[list[Graph]]:
    """Connected class members grouped by vertex count, deduped, sorted."""
    levels: list[list[Graph]] = [[] for _ in range(max_n + 1)]
    if max_n >= 1:
        levels[1] = [Graph(1, [])]
    for n in range(2, max_n + 1):
        seen = {}
        for g in levels[n - 1]:
            for S in _attach_sets(g, min_girth):
                h = add_vertex(g, S)
                if not is_subcubic(h):
                    continue
                if h.m > _ALWAYS_PLANAR_EDGES and find_planar_embedding(h) is None:
                    continue
                code = canonical_code(h)
                if code not in seen:
                    seen[code] = h
        levels[n] = [seen[code] for code in sorted(seen)]
    return levels


def enumerate_class(spec: GeneratorSpec) -> Iterator[Graph]:
    """All subcubic planar graphs with girth >= min_girth, up to max_n
    vertices, exactly once up to isomorphism, connected first by size.

    With connectivity waived, disjoint unions of class members are
    appended after the connected stream, again without repeats.
    """
    spec.validate()
    if spec.max_n > ENUMERATION_BUDGET:
        raise BudgetExceeded(spec.max_n, ENUMERATION_BUDGET, "class enumeration")
    levels = _enumerate_connected(spec.max_n, spec.min_girth)
    for n in range(1, spec.max_n + 1):
        yield from levels[n]
    if spec.connectivity:
        return
    # A disconnected graph is a multiset of connected components, so
    # nondecreasing component choices enumerate each exactly once.
    pool = [(n, i, g) for n in range(1, spec.max_n + 1) for i, g in enumerate(levels[n])]

    def unions(start: int, remaining: int, parts: list) -> Iterator[Graph]:
        for idx in range(start, len(pool)):
            n, _, g = pool[idx]
            if n > remaining:
                continue
            chosen = parts + [g]
            if len(chosen) >= 2:
                yield _disjoint_union(chosen)
            yield from unions(idx, remaining - n, chosen)

    yield from unions(0, spec.max_n, [])


def _disjoint_union(parts: list) -> Graph:
    edges = []
    offset = 0
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def attach_pendant(g: Graph, v: int) -> Graph:
    """New leaf hanging from v."""
    return add_vertex(g, [v])


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by a path through a fresh vertex."""
    edges = [e for e in g.edges() if e != (min(u, v), max(u, v))]
    w = g.n
    edges.extend([(u, w), (v, w)])
    return Graph(g.n + 1, edges)


def attach_cycle_at_vertex(g: Graph, v: int, length: int) -> Graph:
    """New cycle of the given length sharing exactly the vertex v."""
    edges = list(g.edges())
    fresh = list(range(g.n, g.n + length - 1))
    ring = [v] + fresh
    edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
    return Graph(g.n + length - 1, edges)


def fuse_cycle_on_edge(g: Graph, u: int, v: int, length: int) -> Graph:
    """New cycle of the given length sharing exactly the edge uv."""
    edges = list(g.edges())
    fresh = list(range(g.n, g.n + length - 2))
    chain = [u] + fresh + [v]
    edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return Graph(g.n + length - 2, edges)


def add_long_chord(g: Graph, u: int, v: int) -> Graph:
    """Direct edge between two currently distant vertices."""
    return Graph(g.n, list(g.edges()) + [(u, v)])


def random_instance(spec: GeneratorSpec) -> Graph:
    """Randomly grown class member, deterministic under the seed.

    Growth steps keep the class invariants by construction except for
    planarity of chords, which is checked and rolled back.  Bounded
    retries; exhausting them raises GenerationFailed.
    """
    spec.validate()
    rng = random.Random(spec.seed)
    ring = INF if spec.min_girth == INF else int(spec.min_girth)
    for _ in range(50):
        g = Graph(1, []) if ring == INF or spec.max_n < ring else _cycle(ring)
        for _ in range(4 * spec.max_n):
            if g.n >= spec.max_n:
                break
            g = _random_step(g, spec, rng) or g
        if (
            g.n <= spec.max_n
            and is_subcubic(g)
            and is_connected(g)
            and girth(g) >= spec.min_girth
            and find_planar_embedding(g) is not None
        ):
            return g
    raise GenerationFailed(f"no instance for {spec} after bounded retries")


def _cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def _random_step(g: Graph, spec: GeneratorSpec, rng: random.Random) -> Optional[Graph]:
    room = spec.max_n - g.n
    ring = 0 if spec.min_girth == INF else int(spec.min_girth)
    ops = []
    open_vertices = [v for v in range(g.n) if g.degree(v) < 3]
    if open_vertices:
        ops.append("pendant")
    if g.m > 0 and ring:
        ops.append("subdivide")
    if ring and room >= ring - 1 and any(g.degree(v) <= 1 for v in range(g.n)):
        ops.append("cycle_at_vertex")
    if ring and room >= ring - 2:
        ops.append("fuse_cycle")
    if ring:
        ops.append("chord")
    if not ops:
        return None
    op = rng.choice(ops)
    if op == "pendant":
        return attach_pendant(g, rng.choice(open_vertices))
    if op == "subdivide":
        u, v = rng.choice(g.edges())
        return subdivide_edge(g, u, v)
    if op == "cycle_at_vertex":
        v = rng.choice([v for v in range(g.n) if g.degree(v) <= 1])
        return attach_cycle_at_vertex(g, v, ring)
    if op == "fuse_cycle":
        pairs = [(u, v) for u, v in g.edges() if g.degree(u) <= 2 and g.degree(v) <= 2]
        if not pairs:
            return None
        u, v = rng.choice(pairs)
        return fuse_cycle_on_edge(g, u, v, ring)
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.degree(u) <= 2 and g.degree(v) <= 2 and distance(g, u, v) >= ring - 1
    ]
    if not pairs:
        return None
    u, v = rng.choice(pairs)
    h = add_long_chord(g, u, v)
    if find_planar_embedding(h) is None:
        return None
    return h


def _from_nx(nxg) -> Graph:
    nodes = sorted(nxg.nodes())
    idx = {x: i for i, x in enumerate(nodes)}
    return Graph(len(nodes), [(idx[u], idx[v]) for u, v in nxg.edges()])


def _path(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def _honeycomb(k: int) -> Graph:
    """Chain of k hexagons, consecutive ones sharing an edge."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    n = 6
    top, bot = 2, 3
    for _ in range(k - 1):
        fresh = list(range(n, n + 4))
        chain = [top] + fresh + [bot]
        edges.extend((chain[i], chain[i + 1]) for i in range(5))
        top, bot = fresh[1], fresh[2]
        n += 4
    return Graph(n, edges)


def _subdivided_prism() -> Graph:
    g = _from_nx(nx.circular_ladder_graph(6))
    for i in range(6):
        g = subdivide_edge(g, i, i + 6)
    return g


def _two_heptagons() -> Graph:
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(7 + i, 7 + (i + 1) % 7) for i in range(7)]
    edges += [(14, 0), (14, 7)]
    return Graph(15, edges)


def named(name: str) -> tuple[Graph, Optional[RotationSystem]]:
    """Catalog fixture by name, with a rotation system when planar."""
    key = name.strip().lower()
    g: Optional[Graph] = None
    if key in ("c5", "c6", "c7"):
        g = _cycle(int(key[1:]))
    elif key.startswith("c") and key[1:].isdigit() and int(key[1:]) >= 3:
        g = _cycle(int(key[1:]))
    elif key.startswith("p") and key[1:].isdigit() and int(key[1:]) >= 1:
        g = _path(int(key[1:]))
    elif key in ("q3", "cube"):
        g = _from_nx(nx.cubical_graph())
    elif key in ("prism6", "6-prism"):
        g = _from_nx(nx.circular_ladder_graph(6))
    elif key == "dodecahedron":
        g = _from_nx(nx.dodecahedral_graph())
    elif key == "petersen":
        g = _from_nx(nx.petersen_graph())
    elif key.startswith("honeycomb-") and key[10:].isdigit() and int(key[10:]) >= 1:
        g = _honeycomb(int(key[10:]))
    elif key == "subdivided-prism":
        g = _subdivided_prism()
    elif key in ("two-heptagons", "two-heptagons-sharing-a-2-vertex"):
        g = _two_heptagons()
    if g is None:
        raise UnknownName(
            f"unknown fixture '{name}'; try c<k>, p<k>, q3, prism6, dodecahedron,"
            " petersen, honeycomb-<k>, subdivided-prism, two-heptagons"
        )
    return g, find_planar_embedding(g) if is_connected(g) else None
