"""Reducible configurations and the six-cycle recoloring engine.

Detects local structures that let a square list-coloring of a smaller
graph extend to the whole graph, and carries out the extensions: greedy
completion at low-degree vertices, the cut-vertex edge splice, and the
full recoloring decision tree around a six-cycle with a 2-vertex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .coloring import find_L_coloring, greedy_extend, is_proper, normalize_lists
from .errors import ListTooSmall, NotCutVertex, NotTwoVertex, PreconditionViolated
from .formats import write_graph_text, write_lists
from .graph_core import (
    Graph,
    biconnected_components,
    bfs_distances,
    components,
    cut_vertices,
    distance,
    girth,
    induced_subgraph,
    is_connected,
    is_subcubic,
    m1_m2,
    square,
)

log = logging.getLogger("sqcolor")

ALPHA = "alpha"
A = "a"
B = "b"
C = "c"

# Recoloring table for the last branch of extend_sixcycle.  Keys are the
# available 2-sets at (v2, v3, v4); values are the new colors on
# (v1, ..., v5).  v1 always has {a, b, alpha} available and v5 has
# {b, c, alpha}.  Every row avoids conflicts on the square-adjacent
# pairs 12, 23, 34, 45, 13, 24, 35, 15; the pairs 14 and 25 are free.
RECOLORING_ROWS: dict[tuple[frozenset, frozenset, frozenset], tuple] = {
    (frozenset({A, B}), frozenset({B, A}), frozenset({C, A})): (ALPHA, B, A, C, B),
    (frozenset({A, B}), frozenset({B, C}), frozenset({C, A})): (A, B, C, A, ALPHA),
    (frozenset({A, B}), frozenset({B, ALPHA}), frozenset({C, A})): (A, B, ALPHA, C, B),
    (frozenset({A, B}), frozenset({B, A}), frozenset({C, B})): (ALPHA, B, A, C, B),
    (frozenset({A, B}), frozenset({B, C}), frozenset({C, B})): (B, A, C, B, ALPHA),
    (frozenset({A, B}), frozenset({B, ALPHA}), frozenset({C, B})): (A, B, ALPHA, C, B),
    (frozenset({A, C}), frozenset({B, A}), frozenset({C, A})): (A, C, B, A, ALPHA),
    (frozenset({A, C}), frozenset({B, C}), frozenset({C, A})): (A, C, B, A, ALPHA),
    (frozenset({A, C}), frozenset({B, ALPHA}), frozenset({C, A})): (A, C, B, A, ALPHA),
    (frozenset({A, C}), frozenset({B, A}), frozenset({C, B})): (ALPHA, C, A, B, C),
    (frozenset({A, C}), frozenset({B, C}), frozenset({C, B})): (B, A, C, B, ALPHA),
    (frozenset({A, C}), frozenset({B, ALPHA}), frozenset({C, B})): (A, C, ALPHA, B, C),
}

# Within-cycle pairs that are square-adjacent when the girth is >= 6.
SQUARE_PAIRS = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 3), (2, 4), (0, 4))


@dataclass(frozen=True)
class SixCycleConfig:
    """A six-cycle whose entry two_vertex points at a degree-2 vertex."""

    cycle: tuple
    two_vertex: int
    host: Graph

    def ordered(self) -> tuple:
        """Cycle vertices rotated so the degree-2 vertex comes last."""
        k = self.two_vertex
        return tuple(self.cycle[(k + 1 + i) % 6] for i in range(6))

    def validate(self) -> None:
        g = self.host
        cyc = self.cycle
        if len(cyc) != 6 or len(set(cyc)) != 6:
            raise PreconditionViolated("cycle must list six distinct vertices")
        for i in range(6):
            u, v = cyc[i], cyc[(i + 1) % 6]
            if not (0 <= u < g.n) or not (0 <= v < g.n) or not g.has_edge(u, v):
                raise PreconditionViolated(f"missing cycle edge {u}-{v}")
        if not (0 <= self.two_vertex < 6):
            raise PreconditionViolated("two_vertex must index into the cycle")
        v6 = self.cycle[self.two_vertex]
        if g.degree(v6) != 2:
            raise PreconditionViolated(f"vertex {v6} has degree {g.degree(v6)}, not 2")
        if girth(g) < 6:
            raise PreconditionViolated("host girth is below 6")


@dataclass(frozen=True)
class AvailableLists:
    """Colors still usable at each cycle vertex, plus the four key colors."""

    C: dict
    alpha: int
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class OneVertex:
    v: int

    def verify(self, g: Graph) -> bool:
        return 0 <= self.v < g.n and g.degree(self.v) <= 1


@dataclass(frozen=True)
class CutTwoVertex:
    u: int
    x: int
    y: int

    def verify(self, g: Graph) -> bool:
        if not 0 <= self.u < g.n:
            return False
        return (
            g.degree(self.u) == 2
            and set(g.neighbors(self.u)) == {self.x, self.y}
            and self.u in cut_vertices(g)
        )


@dataclass(frozen=True)
class SixCycleTwoVertex:
    config: SixCycleConfig

    def verify(self, g: Graph) -> bool:
        if self.config.host is not g and self.config.host != g:
            return False
        try:
            self.config.validate()
        except PreconditionViolated:
            return False
        return True


@dataclass(frozen=True)
class TwoVertexCrowding:
    """Too many 2-vertices within distance two of v."""

    v: int
    m1: int
    m2: int

    def verify(self, g: Graph) -> bool:
        if not 0 <= self.v < g.n:
            return False
        if m1_m2(g, self.v) != (self.m1, self.m2):
            return False
        d = g.degree(self.v)
        score = 2 * self.m1 + self.m2
        return (d == 3 and score > 2) or (d == 2 and score > 0)


@dataclass(frozen=True)
class SpacingViolation:
    """Two 2-vertices on a common cycle at distance at most 3."""

    cycle: tuple
    u: int
    w: int
    dist: int

    def verify(self, g: Graph) -> bool:
        cyc = self.cycle
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            return False
        if not all(0 <= v < g.n for v in cyc):
            return False
        if not all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))):
            return False
        return (
            self.u in cyc
            and self.w in cyc
            and self.u != self.w
            and g.degree(self.u) == 2
            and g.degree(self.w) == 2
            and distance(g, self.u, self.w) == self.dist
            and self.dist <= 3
        )


def find_sixcycle_two_vertex(g: Graph) -> Optional[SixCycleConfig]:
    """Find a six-cycle through a 2-vertex; requires host girth >= 6."""
    if girth(g) < 6:
        return None
    for v6 in range(g.n):
        if g.degree(v6) != 2:
            continue
        x, y = sorted(g.neighbors(v6))
        # Look for a path x .. y of length 4 avoiding v6; together with
        # x-v6-y it closes a six-cycle.
        path = _path_of_length(g, x, y, 4, forbidden={v6})
        if path is not None:
            cycle = tuple(path) + (v6,)
            return SixCycleConfig(cycle=cycle, two_vertex=5, host=g)
    return None


def _path_of_length(g: Graph, src: int, dst: int, length: int, forbidden: set) -> Optional[list]:
    """Lexicographically first simple src-dst path with exactly `length` edges."""
    path = [src]
    used = {src} | set(forbidden)

    def dfs(v: int, left: int) -> bool:
        if left == 0:
            return v == dst
        for u in g.adj[v]:
            if u in used or (u == dst and left > 1):
                continue
            used.add(u)
            path.append(u)
            if dfs(u, left - 1):
                return True
            path.pop()
            used.discard(u)
        return False

    return path if dfs(src, length) else None


def _cycle_through(g: Graph, block: set, u: int, w: int) -> tuple:
    """Some cycle inside the block containing both u and w."""
    best: list = []

    def dfs(v: int, path: list, on_path: set) -> bool:
        for x in g.adj[v]:
            if x == u and len(path) >= 3 and w in on_path:
                best.extend(path)
                return True
            if x in on_path or x not in block:
                continue
            path.append(x)
            on_path.add(x)
            if dfs(x, path, on_path):
                return True
            path.pop()
            on_path.discard(x)
        return False

    found = dfs(u, [u], {u})
    assert found, "vertices share a 2-connected block, so a common cycle exists"
    return tuple(best)


def find_spacing_violation(g: Graph) -> Optional[SpacingViolation]:
    """Two 2-vertices at distance <= 3 sharing a cycle, if any."""
    twos = [v for v in range(g.n) if g.degree(v) == 2]
    if len(twos) < 2:
        return None
    blocks = [b for b in biconnected_components(g) if len(b) >= 3]
    for i, u in enumerate(twos):
        dist = None
        for w in twos[i + 1 :]:
            if not any(u in b and w in b for b in blocks):
                continue
            if dist is None:
                dist = bfs_distances(g, u)
            if dist[w] <= 3:
                block = next(b for b in blocks if u in b and w in b)
                cycle = _cycle_through(g, block, u, w)
                return SpacingViolation(cycle=cycle, u=u, w=w, dist=int(dist[w]))
    return None


def find_reducible_config(g: Graph):
    """First reducible structure in preference order, or None.

    Constructively reducible variants come first: degree-<=1 vertex,
    cut 2-vertex, six-cycle with a 2-vertex; the two counting variants
    witness out-of-class crowding and only gate fallback search.
    """
    for v in range(g.n):
        if g.degree(v) <= 1:
            return OneVertex(v)
    cuts = cut_vertices(g)
    for u in range(g.n):
        if g.degree(u) == 2 and u in cuts:
            x, y = sorted(g.neighbors(u))
            return CutTwoVertex(u, x, y)
    cfg = find_sixcycle_two_vertex(g)
    if cfg is not None:
        return SixCycleTwoVertex(cfg)
    # Spacing first: a close pair on a cycle always puts some vertex
    # over the crowding threshold too, so the other order would never
    # surface a spacing witness.
    sv = find_spacing_violation(g)
    if sv is not None:
        return sv
    for v in range(g.n):
        m1, m2 = m1_m2(g, v)
        score = 2 * m1 + m2
        d = g.degree(v)
        if (d == 3 and score > 2) or (d == 2 and score > 0):
            return TwoVertexCrowding(v, m1, m2)
    return None


def _external_square_neighbors(g: Graph, v: int, cycle_set: set) -> set:
    """G2-neighbors of v outside the cycle."""
    out = set()
    for u in g.adj[v]:
        if u not in cycle_set:
            out.add(u)
        for w in g.adj[u]:
            if w != v and w not in cycle_set:
                out.add(w)
    return out


def available_lists(cfg: SixCycleConfig, L: Sequence[Iterable[int]], phi: Sequence[Optional[int]]) -> AvailableLists:
    """Per-vertex colors not used by colored square-neighbors off the cycle.

    phi colors every vertex except the cycle's 2-vertex (entry None).
    Callers reach this only on the branch where the two neighbors of the
    2-vertex around the cycle received the same color.
    """
    g = cfg.host
    lists = normalize_lists(g, L)
    for v in range(g.n):
        if len(lists[v]) < 7:
            raise ListTooSmall(f"vertex {v} has a list of size {len(lists[v])}")
    v1, v2, v3, v4, v5, v6 = cfg.ordered()
    cycle_set = set(cfg.cycle)
    C = {}
    for v in cfg.cycle:
        used = set()
        for y in _external_square_neighbors(g, v, cycle_set):
            if phi[y] is not None:
                used.add(phi[y])
        C[v] = frozenset(lists[v] - used)
    alpha = phi[v1]
    if alpha is None or phi[v5] != alpha:
        raise PreconditionViolated("both neighbors of the 2-vertex must carry one color")
    return AvailableLists(C=C, alpha=alpha, a=phi[v2], b=phi[v3], c=phi[v4])


def _invariant(cond: bool, msg: str) -> None:
    if not cond:
        raise AssertionError(f"recoloring invariant failed: {msg}")


def _check_phi(g: Graph, sq: Graph, lists, phi, v1: int, v5: int, v6: int) -> None:
    """phi must be a proper list coloring of the square of g minus v6."""
    if len(phi) != g.n:
        raise PreconditionViolated("coloring length does not match host")
    if phi[v6] is not None:
        raise PreconditionViolated("the 2-vertex must be uncolored")
    for v in range(g.n):
        if v == v6:
            continue
        if phi[v] is None:
            raise PreconditionViolated(f"vertex {v} is uncolored")
        if phi[v] not in lists[v]:
            raise PreconditionViolated(f"vertex {v} wears a color outside its list")
    # Removing the degree-2 vertex v6 deletes exactly the square edges at
    # v6 plus the pair {v1, v5}, whose distance without v6 is >= 3.
    for u in range(g.n):
        if u == v6:
            continue
        for w in sq.adj[u]:
            if w <= u or w == v6:
                continue
            if {u, w} == {v1, v5}:
                continue
            if phi[u] == phi[w]:
                raise PreconditionViolated(f"square edge {u}-{w} is monochromatic")


def _finish(g: Graph, sq: Graph, lists, f: list, v6: int) -> list:
    """Greedily color v6 in the square and verify the whole coloring."""
    choice = greedy_extend(sq, f, v6, lists)
    _invariant(choice is not None, "the 2-vertex has at most 6 square-neighbors, a color is free")
    f[v6] = choice
    _invariant(is_proper(sq, f), "extension produced an improper square coloring")
    _invariant(all(f[v] in lists[v] for v in range(g.n)), "extension left some list")
    return f


def extend_sixcycle(cfg: SixCycleConfig, L: Sequence[Iterable[int]], phi: Sequence[Optional[int]]) -> list:
    """Extend a square coloring of host minus the 2-vertex to the host square.

    Decision tree: if the cycle neighbors of the 2-vertex differ in
    color, coloring the 2-vertex greedily suffices.  Otherwise try the
    five single-vertex recolorings (v1, v5, v2, v3, v4, in this order;
    later ones rely on the equalities that earlier failures establish),
    and when all escapes fail, look up the precomputed recoloring row
    for the available 2-sets at (v2, v3, v4).  Never fails on valid
    input.
    """
    cfg.validate()
    g = cfg.host
    if not is_subcubic(g):
        raise PreconditionViolated("host must be subcubic")
    lists = normalize_lists(g, L)
    for v in range(g.n):
        if len(lists[v]) < 7:
            raise PreconditionViolated(f"vertex {v} has a list of size {len(lists[v])} < 7")
    v1, v2, v3, v4, v5, v6 = cfg.ordered()
    sq = square(g)
    _check_phi(g, sq, lists, phi, v1, v5, v6)

    if phi[v1] != phi[v5]:
        return _finish(g, sq, lists, list(phi), v6)

    avail = available_lists(cfg, L, phi)
    Cv = avail.C
    alpha, a, b, c = avail.alpha, avail.a, avail.b, avail.c
    _invariant(len({alpha, a, b, c}) == 4, "the four cycle colors must be distinct")
    for v, bound in ((v1, 3), (v2, 2), (v3, 2), (v4, 2), (v5, 3), (v6, 5)):
        _invariant(len(Cv[v]) >= bound, f"available list at vertex {v} smaller than {bound}")

    # Escape recolorings.  Each changes one or two cycle vertices and
    # leaves the rest of phi in place.
    for gamma in sorted(Cv[v1] - {a, b, alpha}):
        f = list(phi)
        f[v1] = gamma
        return _finish(g, sq, lists, f, v6)
    for gamma in sorted(Cv[v5] - {b, c, alpha}):
        f = list(phi)
        f[v5] = gamma
        return _finish(g, sq, lists, f, v6)
    for gamma in sorted(Cv[v2] - {a, b, c}):
        f = list(phi)
        f[v2] = gamma
        f[v1] = a
        return _finish(g, sq, lists, f, v6)
    for gamma in sorted(Cv[v3] - {a, b, c, alpha}):
        f = list(phi)
        f[v3] = gamma
        f[v1] = b
        return _finish(g, sq, lists, f, v6)
    for gamma in sorted(Cv[v4] - {a, b, c}):
        f = list(phi)
        f[v4] = gamma
        f[v5] = c
        return _finish(g, sq, lists, f, v6)

    # All escapes failed, so the available lists collapse to the table
    # situation; these five facts are forced at this point.
    _invariant(Cv[v1] == {a, b, alpha}, "v1 must have exactly {a, b, alpha} available")
    _invariant(Cv[v5] == {b, c, alpha}, "v5 must have exactly {b, c, alpha} available")
    _invariant(a in Cv[v2] and Cv[v2] <= {a, b, c}, "v2 availability must sit inside {a, b, c}")
    _invariant(b in Cv[v3] and Cv[v3] <= {a, b, c, alpha}, "v3 availability must sit inside {a, b, c, alpha}")
    _invariant(c in Cv[v4] and Cv[v4] <= {a, b, c}, "v4 availability must sit inside {a, b, c}")

    sym = {A: a, B: b, C: c, ALPHA: alpha}
    c2 = frozenset({A, B}) if b in Cv[v2] else frozenset({A, C})
    if a in Cv[v3]:
        c3 = frozenset({B, A})
    elif c in Cv[v3]:
        c3 = frozenset({B, C})
    else:
        c3 = frozenset({B, ALPHA})
    c4 = frozenset({C, A}) if a in Cv[v4] else frozenset({C, B})
    row = RECOLORING_ROWS[(c2, c3, c4)]
    f = list(phi)
    for v, symbol in zip((v1, v2, v3, v4, v5), row):
        f[v] = sym[symbol]
    _invariant(all(f[v] in Cv[v] for v in (v1, v2, v3, v4, v5)), "table row leaves an available list")
    return _finish(g, sq, lists, f, v6)


def reduce_cut_two_vertex(g: Graph, u: int) -> tuple[Graph, Callable]:
    """Splice out a cut 2-vertex: H joins the two sides by a direct edge.

    Returns H and a lift taking (coloring of the square of H, lists of g)
    back to a coloring of the square of g; the spliced vertex is colored
    greedily among its at most 6 square-neighbors.
    """
    if g.degree(u) != 2:
        raise NotTwoVertex(f"vertex {u} has degree {g.degree(u)}")
    if u not in cut_vertices(g):
        raise NotCutVertex(f"vertex {u} does not disconnect the graph")
    x, y = sorted(g.neighbors(u))
    if g.has_edge(x, y):
        raise PreconditionViolated("the neighbors are already adjacent")
    old_ids = [v for v in range(g.n) if v != u]
    new_id = {v: i for i, v in enumerate(old_ids)}
    edges = [(new_id[p], new_id[q]) for p, q in g.edges() if p != u and q != u]
    edges.append((new_id[x], new_id[y]))
    H = Graph(g.n - 1, edges)

    def lift(phi_H: Sequence[Optional[int]], L: Sequence[Iterable[int]]) -> list:
        lists = normalize_lists(g, L)
        f: list = [None] * g.n
        for i, v in enumerate(old_ids):
            f[v] = phi_H[i]
        sq = square(g)
        choice = greedy_extend(sq, f, u, lists)
        _invariant(choice is not None, "a spliced 2-vertex has at most 6 square-neighbors")
        f[u] = choice
        return f

    return H, lift


def _color_connected(g: Graph, lists) -> Optional[list]:
    """Recursive coloring of the square of one connected in-class graph."""
    if g.n == 0:
        return []
    if g.n == 1:
        return [min(lists[0])]
    cfg = find_reducible_config(g)
    if isinstance(cfg, OneVertex):
        sub, old_ids = induced_subgraph(g, [v for v in range(g.n) if v != cfg.v])
        inner = _color_connected(sub, [lists[v] for v in old_ids])
        if inner is None:
            return None
        f: list = [None] * g.n
        for i, v in enumerate(old_ids):
            f[v] = inner[i]
        choice = greedy_extend(square(g), f, cfg.v, lists)
        _invariant(choice is not None, "a degree-<=1 vertex has at most 3 square-neighbors")
        f[cfg.v] = choice
        return f
    if isinstance(cfg, CutTwoVertex):
        H, lift = reduce_cut_two_vertex(g, cfg.u)
        if girth(H) >= 6:
            old_ids = [v for v in range(g.n) if v != cfg.u]
            inner = _color_square_7lists(H, [lists[v] for v in old_ids])
            if inner is not None:
                return lift(inner, lists)
        # The splice cannot shorten any cycle below 6, but stay safe on
        # adversarial inputs and fall through to exact search.
    if isinstance(cfg, SixCycleTwoVertex):
        v6 = cfg.config.cycle[cfg.config.two_vertex]
        sub, old_ids = induced_subgraph(g, [v for v in range(g.n) if v != v6])
        inner = _color_connected(sub, [lists[v] for v in old_ids])
        if inner is None:
            return None
        phi: list = [None] * g.n
        for i, v in enumerate(old_ids):
            phi[v] = inner[i]
        return extend_sixcycle(cfg.config, lists, phi)
    return find_L_coloring(square(g), lists)


def _color_square_7lists(g: Graph, lists) -> Optional[list]:
    if is_connected(g):
        return _color_connected(g, lists)
    f: list = [None] * g.n
    for comp in components(g):
        sub, old_ids = induced_subgraph(g, comp)
        inner = _color_connected(sub, [lists[v] for v in old_ids])
        if inner is None:
            return None
        for i, v in enumerate(old_ids):
            f[v] = inner[i]
    return f


def color_square_7lists(g: Graph, L: Sequence[Iterable[int]]) -> Optional[list]:
    """Properly color the square of g from per-vertex lists of size >= 7.

    Recursion driven by find_reducible_config; structures without a
    constructive reduction fall back to exact search on the current
    subinstance.  On valid input this never returns None; a None is a
    bug and the offending instance is logged in full.
    """
    from .planar_embed import find_planar_embedding

    if not is_subcubic(g):
        raise PreconditionViolated("graph must be subcubic")
    if girth(g) < 6:
        raise PreconditionViolated("girth must be at least 6")
    # The embedding backend wants connected input; planarity of the whole
    # graph is planarity of every component.
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        if find_planar_embedding(sub) is None:
            raise PreconditionViolated("graph must be planar")
    lists = normalize_lists(g, L)
    for v in range(g.n):
        if len(lists[v]) < 7:
            raise PreconditionViolated(f"vertex {v} has a list of size {len(lists[v])} < 7")
    out = _color_square_7lists(g, lists)
    if out is None:
        log.error(
            "coloring fell through on a valid instance\n%s%s",
            write_graph_text(g),
            write_lists(lists),
        )
    return out


@dataclass(frozen=True)
class Lemma2Case:
    c2: tuple
    c3: tuple
    c4: tuple
    f: tuple
    failure: Optional[str]

    def line(self) -> str:
        def fmt(t):
            return "{" + ",".join(t) + "}"

        verdict = "OK" if self.failure is None else f"FAIL({self.failure})"
        return f"case {fmt(self.c2)}|{fmt(self.c3)}|{fmt(self.c4)} -> f=({','.join(self.f)}) {verdict}"


@dataclass(frozen=True)
class Lemma2Report:
    cases: tuple

    @property
    def passed(self) -> bool:
        return all(case.failure is None for case in self.cases)

    def render(self) -> str:
        return "\n".join(case.line() for case in self.cases)


def check_lemma2_row(c2: frozenset, c3: frozenset, c4: frozenset, f: tuple) -> Optional[str]:
    """Validate one recoloring row; None when sound, else the broken constraint.

    Checks membership of each new color in its available set (v1 and v5
    have the fixed sets from the failed escapes), properness on the
    square-adjacent pairs inside the cycle, and that the four colors
    seen by the 2-vertex leave it a free color from its 5 available.
    """
    c1 = frozenset({A, B, ALPHA})
    c5 = frozenset({B, C, ALPHA})
    sets = (c1, c2, c3, c4, c5)
    for i in range(5):
        if f[i] not in sets[i]:
            return f"f(v{i + 1}) not in C(v{i + 1})"
    for i, j in SQUARE_PAIRS:
        if f[i] == f[j]:
            return f"v{i + 1}v{j + 1} conflict"
    if len({f[0], f[1], f[3], f[4]}) > 4:
        return "v6 has no free color"
    return None


def _ordered_symbols(s: frozenset, first: str) -> tuple:
    rest = sorted(s - {first}, key=[A, B, C, ALPHA].index)
    return (first, *rest)


def verify_lemma2_tables() -> Lemma2Report:
    """Check all 12 recoloring rows; every case must come back OK."""
    cases = []
    for c2 in (frozenset({A, B}), frozenset({A, C})):
        for c4 in (frozenset({C, A}), frozenset({C, B})):
            for c3 in (frozenset({B, A}), frozenset({B, C}), frozenset({B, ALPHA})):
                f = RECOLORING_ROWS[(c2, c3, c4)]
                failure = check_lemma2_row(c2, c3, c4, f)
                cases.append(
                    Lemma2Case(
                        c2=_ordered_symbols(c2, A),
                        c3=_ordered_symbols(c3, B),
                        c4=_ordered_symbols(c4, C),
                        f=f,
                        failure=failure,
                    )
                )
    return Lemma2Report(cases=tuple(cases))
