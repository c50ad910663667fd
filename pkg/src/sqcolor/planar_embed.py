"""Combinatorial plane embeddings: rotation systems and face tracing.

A rotation system stores, for each vertex, the cyclic order of its
neighbors.  Faces are closed walks of directed edges; the successor of
(u, v) is (v, w) where w follows u in the rotation at v.  Face length
counts edge sides, so a bridge contributes 2 to the face containing it.
Embedding operations reject disconnected graphs; callers embed each
component separately.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .errors import InconsistentRotation
from .graph_core import Graph, is_connected


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbor order per vertex."""

    rot: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> None:
        if len(self.rot) != g.n:
            raise InconsistentRotation(f"rotation has {len(self.rot)} rows for n={g.n}")
        for v in range(g.n):
            if tuple(sorted(self.rot[v])) != g.adj[v]:
                raise InconsistentRotation(f"rotation at vertex {v} does not match adjacency")


@dataclass(frozen=True)
class Face:
    """One face boundary walk, as a tuple of directed edges."""

    walk: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.walk)

    def vertices(self) -> tuple[int, ...]:
        """Vertices visited by the walk, with repetition."""
        return tuple(u for u, _ in self.walk)


def faces(g: Graph, rs: RotationSystem) -> list[Face]:
    """Trace all faces of the embedding given by rs."""
    if not is_connected(g):
        raise ValueError("face tracing requires a connected graph")
    rs.validate(g)
    if g.n == 1 and g.m == 0:
        # a single vertex in the plane bounds one face
        return [Face(())]
    pos = {}
    for v in range(g.n):
        for i, u in enumerate(rs.rot[v]):
            pos[(u, v)] = i
    seen = set()
    out = []
    darts = [(u, v) for u in range(g.n) for v in rs.rot[u]]
    for start in sorted(darts):
        if start in seen:
            continue
        walk = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            u, v = cur
            i = pos[(u, v)]
            w = rs.rot[v][(i + 1) % len(rs.rot[v])]
            cur = (v, w)
        out.append(Face(tuple(walk)))
    return out


def euler_genus_check(g: Graph, rs: RotationSystem) -> bool:
    """Return True when n - m + f = 2 for the faces traced from rs."""
    f = len(faces(g, rs))
    return g.n - g.m + f == 2


def find_planar_embedding(g: Graph) -> RotationSystem | None:
    """Return a rotation system with n - m + f = 2, or None when none exists.

    The search is delegated to networkx's linear-time planarity test; the
    returned rotation is re-validated here by tracing faces and checking
    the Euler count, so a wrong embedding cannot slip through.
    """
    if not is_connected(g):
        raise ValueError("embedding requires a connected graph")
    if g.n == 1:
        return RotationSystem(((),))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        return None
    rot = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(g.n))
    rs = RotationSystem(rot)
    if not euler_genus_check(g, rs):
        raise AssertionError("planarity backend produced a non-planar rotation")
    return rs


def incident_faces(v: int, face_list: list[Face]) -> Counter:
    """Return face index -> number of times the face walk visits v."""
    out: Counter = Counter()
    for i, face in enumerate(face_list):
        hits = sum(1 for u, _ in face.walk if u == v)
        if hits:
            out[i] = hits
        elif not face.walk and len(face_list) == 1:
            # single-vertex graph: the lone face is incident to the vertex
            out[i] = 1
    return out
