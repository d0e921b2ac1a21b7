"""Finite directed graphs and the constructions used on them.

Vertex and edge order is taken from the input and is canonical: every
matrix and every group coordinate derived from a graph is indexed in this
order.  The incidence convention is ``A[v][w] = #{edges v -> w}``, so the
Bowen-Franks group is ``coker(I - A^t)``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .intlin.matrix import IntMatrix

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "parse_graph",
    "serialize_graph",
    "is_regular",
    "incidence_matrix",
    "transpose_graph",
    "source_removal",
    "rose",
    "cuntz_splice",
]


class GraphError(ValueError):
    """Malformed graph data or a graph that fails an operation's precondition."""


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(
            e if isinstance(e, Edge) else Edge(*e) for e in self.edges))
        dup = _first_duplicate(self.vertices)
        if dup is not None:
            raise GraphError(f"duplicate vertex identifier {dup!r}")
        dup = _first_duplicate([e.id for e in self.edges])
        if dup is not None:
            raise GraphError(f"duplicate edge identifier {dup!r}")
        vset = set(self.vertices)
        for e in self.edges:
            if e.id in vset:
                # element expressions use bare identifiers, so the two
                # namespaces must not overlap
                raise GraphError(f"identifier {e.id!r} names both a vertex and an edge")
            for end in (e.src, e.dst):
                if end not in vset:
                    raise GraphError(f"edge {e.id!r}: undeclared endpoint {end!r}")

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        """Edges grouped by source vertex, in input order."""
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def src(self, edge_id: str) -> str:
        return self.edge_map[edge_id].src

    def dst(self, edge_id: str) -> str:
        return self.edge_map[edge_id].dst

    def is_vertex(self, name: str) -> bool:
        return name in self.vertex_index

    def is_edge(self, name: str) -> bool:
        return name in self.edge_index

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[e.id, e.src, e.dst] for e in self.edges],
        }


def _first_duplicate(items):
    seen = set()
    for x in items:
        if x in seen:
            return x
        seen.add(x)
    return None


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format ``{"vertices": [...], "edges": [[id, src, dst], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return graph_from_json(data)


def graph_from_json(data) -> Graph:
    if not isinstance(data, dict):
        raise GraphError("graph must be a JSON object")
    unknown = set(data) - {"vertices", "edges"}
    if unknown:
        raise GraphError(f"unknown graph keys: {sorted(unknown)}")
    verts = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphError("'vertices' must be an array of strings")
    if not isinstance(edges, list):
        raise GraphError("'edges' must be an array")
    parsed = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 3 and all(isinstance(x, str) for x in e)):
            raise GraphError(f"edge #{i} must be a [id, src, dst] triple of strings")
        parsed.append(Edge(*e))
    return Graph(tuple(verts), tuple(parsed))


def serialize_graph(g: Graph) -> str:
    return json.dumps(g.to_json())


def is_regular(g: Graph) -> bool:
    """True iff every vertex emits at least one edge."""
    return all(g.out_edges[v] for v in g.vertices)


def incidence_matrix(g: Graph) -> IntMatrix:
    n = len(g.vertices)
    idx = g.vertex_index
    counts = Counter((idx[e.src], idx[e.dst]) for e in g.edges)
    return IntMatrix.from_rows([[counts[i, j] for j in range(n)] for i in range(n)])


def _fresh(base: str, taken: set[str]) -> str:
    name = base
    k = 1
    while name in taken:
        k += 1
        name = f"{base}_{k}"
    taken.add(name)
    return name


def transpose_graph(g: Graph) -> Graph:
    """Reverse every edge; edge ``e`` becomes ``e_t``."""
    taken = set(g.vertices) | {e.id for e in g.edges}
    edges = tuple(Edge(_fresh(f"{e.id}_t", taken), e.dst, e.src) for e in g.edges)
    return Graph(g.vertices, edges)


def transposed_edge_names(g: Graph, gt: Graph) -> dict[str, str]:
    """Map each edge of ``g`` to its counterpart in ``transpose_graph(g)``."""
    return {e.id: et.id for e, et in zip(g.edges, gt.edges)}


def source_removal(g: Graph) -> Graph:
    """Delete vertices that receive no edges, repeatedly, until none are left."""
    if not is_regular(g):
        raise GraphError("source removal requires a regular graph")
    verts = list(g.vertices)
    edges = list(g.edges)
    while True:
        receiving = {e.dst for e in edges}
        sources = [v for v in verts if v not in receiving]
        if not sources:
            break
        dead = set(sources)
        verts = [v for v in verts if v not in dead]
        edges = [e for e in edges if e.src not in dead]
        if not verts:
            raise GraphError("source removal leaves the empty graph")
    return Graph(tuple(verts), tuple(edges))


def rose(n: int) -> Graph:
    """One vertex ``v`` with ``n`` loops ``e1 .. en``."""
    if n < 1:
        raise GraphError(f"rose needs at least one loop, got {n}")
    return Graph(("v",), tuple(Edge(f"e{i}", "v", "v") for i in range(1, n + 1)))


def cuntz_splice(g: Graph, v: str) -> Graph:
    """Attach the Cuntz splice at ``v``.

    Adds vertices u1, u2 and the six edges v->u1, u1->v, u1->u2, u2->u1,
    u1->u1, u2->u2.  Fresh names get a numeric suffix on collision.
    """
    if v not in g.vertex_index:
        raise GraphError(f"cannot splice at unknown vertex {v!r}")
    taken = set(g.vertices) | {e.id for e in g.edges}
    u1 = _fresh("u1", taken)
    u2 = _fresh("u2", taken)
    wiring = [(v, u1), (u1, v), (u1, u2), (u2, u1), (u1, u1), (u2, u2)]
    new_edges = tuple(Edge(_fresh(f"f{i}", taken), s, d)
                      for i, (s, d) in enumerate(wiring, start=1))
    return Graph(g.vertices + (u1, u2), g.edges + new_edges)
