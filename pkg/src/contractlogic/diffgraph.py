"""Feasibility of integer difference constraints via negative-cycle detection.

A constraint ``x - y <= c`` becomes a weighted edge ``y -> x`` with weight
``c``.  The conjunction is integer-feasible iff the graph has no
negative-weight cycle; shortest-path potentials then give witness values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import ZERO


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    weight: int
    tag: object = None


@dataclass
class DiffGraph:
    edges: list[Edge] = field(default_factory=list)

    def vertices(self) -> list[str]:
        vs = {ZERO}
        for e in self.edges:
            vs.add(e.src)
            vs.add(e.dst)
        return sorted(vs)

    def add_constraint(self, x: str, y: str, c: int, tag: object = None) -> None:
        """Assert x - y <= c."""
        self.edges.append(Edge(y, x, c, tag))


def check_negative_cycle(g: DiffGraph) -> list[Edge] | None:
    """Return the edges of a negative-weight cycle, or None if consistent.

    Bellman-Ford from a virtual source connected to every vertex with
    weight 0 (all distances start at 0), so disconnected components are
    covered in one pass.
    """
    verts = g.vertices()
    dist: dict[str, int] = {v: 0 for v in verts}
    pred: dict[str, Edge] = {}
    n = len(verts)
    last_updated = None
    for i in range(n):
        updated = False
        for e in g.edges:
            if dist[e.src] + e.weight < dist[e.dst]:
                dist[e.dst] = dist[e.src] + e.weight
                pred[e.dst] = e
                updated = True
                last_updated = e.dst
        if not updated:
            return None
    # a relaxation on the n-th pass means some vertex lies on or is
    # reachable from a negative cycle; walk predecessors n times to land
    # inside the cycle, then collect it
    v = last_updated
    for _ in range(n):
        v = pred[v].src
    cycle: list[Edge] = []
    cur = v
    while True:
        e = pred[cur]
        cycle.append(e)
        cur = e.src
        if cur == v:
            break
    cycle.reverse()
    return cycle


def potentials(g: DiffGraph) -> dict[str, int]:
    """Witness values satisfying every constraint, with value(zero) == 0.

    Precondition: no negative cycle.
    """
    verts = g.vertices()
    dist: dict[str, int] = {v: 0 for v in verts}
    for _ in range(len(verts)):
        updated = False
        for e in g.edges:
            if dist[e.src] + e.weight < dist[e.dst]:
                dist[e.dst] = dist[e.src] + e.weight
                updated = True
        if not updated:
            break
    base = dist[ZERO]
    return {v: dist[v] - base for v in verts}
