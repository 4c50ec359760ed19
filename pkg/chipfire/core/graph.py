"""
Weighted graphs and their derived quantities.

A weighted graph is a connected loop-free multigraph whose vertices and edges
carry positive integer weights, every edge weight dividing the weights of both
endpoints. A lending move at v sends w(v)/w(e) chips along each edge e at v.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Any, Dict, List, Mapping, Sequence, Tuple

import networkx as nx

from ..exceptions import (
    DimensionMismatch,
    DisconnectedGraph,
    DivisibilityViolation,
    LoopEdge,
    MalformedInput,
    NonPositiveWeight,
    UnknownVertex,
)
from .types import Divisor, FiringScript, LaplacianMatrix, VertexIndex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vertex:
    """A vertex: external text id and weight w(v)."""

    id: str
    weight: int = 1


@dataclass(frozen=True)
class Edge:
    """An edge class between u and v; mult parallel copies share one weight."""

    u: VertexIndex
    v: VertexIndex
    weight: int = 1
    mult: int = 1

    def other(self, x: VertexIndex) -> VertexIndex:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable validated weighted graph with dense vertex indices."""

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        self._validate()
        self.laplacian

    def _validate(self) -> None:
        if not self.vertices:
            raise MalformedInput("graph has no vertices")
        seen = set()
        for vertex in self.vertices:
            if vertex.id in seen:
                raise MalformedInput("duplicate vertex id", vertex.id)
            seen.add(vertex.id)
            if vertex.weight < 1:
                raise NonPositiveWeight("vertex weight must be >= 1", f"{vertex.id}: {vertex.weight}")
        n = len(self.vertices)
        for edge in self.edges:
            if not (0 <= edge.u < n and 0 <= edge.v < n):
                raise UnknownVertex("edge endpoint out of range", f"{edge.u}-{edge.v}")
            label = self.edge_label(edge)
            if edge.u == edge.v:
                raise LoopEdge("edge has equal endpoints", label)
            if edge.weight < 1:
                raise NonPositiveWeight("edge weight must be >= 1", f"{label}: {edge.weight}")
            if edge.mult < 1:
                raise NonPositiveWeight("edge multiplicity must be >= 1", f"{label}: {edge.mult}")
            for end in (edge.u, edge.v):
                if self.vertices[end].weight % edge.weight:
                    raise DivisibilityViolation(
                        f"edge weight {edge.weight} does not divide weight "
                        f"{self.vertices[end].weight} of {self.vertices[end].id}",
                        label,
                    )
        if not nx.is_connected(self.nx_graph):
            parts = [sorted(self.vertices[i].id for i in comp) for comp in nx.connected_components(self.nx_graph)]
            raise DisconnectedGraph("graph is not connected", " | ".join(",".join(p) for p in parts))

    def edge_label(self, edge: Edge) -> str:
        return f"{self.vertices[edge.u].id}-{self.vertices[edge.v].id}"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(vertex.id for vertex in self.vertices)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(vertex.weight for vertex in self.vertices)

    @cached_property
    def index(self) -> Dict[str, VertexIndex]:
        return {vertex.id: i for i, vertex in enumerate(self.vertices)}

    def vertex_index(self, vertex_id: str) -> VertexIndex:
        """Dense index of an external id."""
        try:
            return self.index[vertex_id]
        except KeyError:
            raise UnknownVertex("no such vertex", vertex_id) from None

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((edge.u, edge.v) for edge in self.edges)
        return graph

    @cached_property
    def transfers(self) -> Tuple[Tuple[int, ...], ...]:
        """transfers[u][v]: chips u sends to v per lending move at u."""
        table = [[0] * self.n for _ in range(self.n)]
        for edge in self.edges:
            for a, b in ((edge.u, edge.v), (edge.v, edge.u)):
                table[a][b] += edge.mult * (self.vertices[a].weight // edge.weight)
        return tuple(tuple(row) for row in table)

    @cached_property
    def valencies(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.transfers)

    @cached_property
    def graph_charge(self) -> int:
        return reduce(math.lcm, self.weights, 1)

    @cached_property
    def charges(self) -> Tuple[int, ...]:
        return tuple(self.graph_charge // w for w in self.weights)

    @cached_property
    def laplacian(self) -> LaplacianMatrix:
        rows = []
        for i in range(self.n):
            rows.append(
                tuple(self.valencies[i] if i == j else -self.transfers[j][i] for j in range(self.n))
            )
        return LaplacianMatrix(tuple(rows))

    def neighbors(self, v: VertexIndex) -> List[VertexIndex]:
        return list(self.nx_graph.adj[v])

    def is_adjacent(self, u: VertexIndex, v: VertexIndex) -> bool:
        return self.transfers[u][v] > 0

    def divisor(self, values: Mapping[str, int]) -> Divisor:
        """Divisor from an id -> chips mapping naming every vertex once."""
        missing = [vid for vid in self.ids if vid not in values]
        if missing:
            raise MalformedInput("divisor misses vertices", ",".join(missing))
        extra = [vid for vid in values if vid not in self.index]
        if extra:
            raise UnknownVertex("divisor names unknown vertices", ",".join(extra))
        return Divisor(tuple(int(values[vid]) for vid in self.ids))

    def labelled(self, vector: Sequence[int]) -> Dict[str, int]:
        return {vid: int(x) for vid, x in zip(self.ids, vector)}

    def word_label(self, letters: Sequence[VertexIndex]) -> str:
        return " ".join(self.vertices[v].id for v in letters)

    def check_vector(self, vector: Sequence[int], what: str = "divisor") -> None:
        if len(vector) != self.n:
            raise DimensionMismatch(f"{what} length differs from vertex count", f"{len(vector)} != {self.n}")


def _field(record: Mapping[str, Any], key: str, default: Any = None, required: bool = False) -> Any:
    if key not in record:
        if required:
            raise MalformedInput(f"missing field '{key}'", record)
        return default
    return record[key]


def _record(value: Any, what: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise MalformedInput(f"{what} must be an object", value)
    return value


def _records(value: Any, what: str) -> List[Any]:
    if not isinstance(value, list):
        raise MalformedInput(f"'{what}' must be a list", value)
    return value


def _int_field(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInput(f"{what} must be an integer", value)
    return value


def build_graph(spec: Mapping[str, Any]) -> WeightedGraph:
    """Validate a graph description and build the graph in listed vertex order."""
    spec = _record(spec, "graph")
    raw_vertices = _records(_field(spec, "vertices", required=True), "vertices")
    raw_edges = _records(_field(spec, "edges", default=[]), "edges")
    vertices: List[Vertex] = []
    for record in raw_vertices:
        if isinstance(record, str):
            record = {"id": record}
        record = _record(record, "vertex")
        vertex_id = str(_field(record, "id", required=True))
        weight = _int_field(_field(record, "weight", 1), f"weight of {vertex_id}")
        vertices.append(Vertex(vertex_id, weight))
    index = {vertex.id: i for i, vertex in enumerate(vertices)}
    edges: List[Edge] = []
    for record in raw_edges:
        record = _record(record, "edge")
        ends = []
        for key in ("u", "v"):
            vertex_id = str(_field(record, key, required=True))
            if vertex_id not in index:
                raise UnknownVertex("edge endpoint is not a listed vertex", vertex_id)
            ends.append(index[vertex_id])
        label = f"{record['u']}-{record['v']}"
        weight = _int_field(_field(record, "weight", 1), f"weight of {label}")
        mult = _int_field(_field(record, "mult", 1), f"mult of {label}")
        edges.append(Edge(ends[0], ends[1], weight, mult))
    graph = WeightedGraph(tuple(vertices), tuple(edges))
    logger.debug("built graph with %d vertices, %d edges, c(G)=%d", graph.n, len(edges), graph.graph_charge)
    return graph


def weighted_valency(g: WeightedGraph, v: VertexIndex) -> int:
    """Sum over edges at v of w(v)/w(e), counting multiplicity."""
    return g.valencies[v]


def charges(g: WeightedGraph) -> Tuple[Tuple[int, ...], int]:
    """Per-vertex charges c(v) = c(G)/w(v) and the graph charge c(G) = lcm of weights."""
    return g.charges, g.graph_charge


def laplacian(g: WeightedGraph) -> LaplacianMatrix:
    return g.laplacian


def apply_script(g: WeightedGraph, d: Divisor, s: FiringScript) -> Divisor:
    """The divisor D - L·σ."""
    g.check_vector(d)
    g.check_vector(s, "script")
    return d - g.laplacian.apply(s)


def degree(d: Divisor) -> int:
    return d.degree


def is_legal(g: WeightedGraph, d: Divisor, s: FiringScript) -> bool:
    """Lending-only script that leaves in debt only vertices already in debt."""
    if not s.is_nonnegative():
        return False
    after = apply_script(g, d, s)
    return all(after[v] >= 0 for v in range(g.n) if d[v] >= 0)


def spanning_tree(g: WeightedGraph, q: VertexIndex) -> Tuple[List[VertexIndex], Dict[VertexIndex, VertexIndex]]:
    """BFS order rooted at q and the parent of every other vertex."""
    order = [q]
    parent: Dict[VertexIndex, VertexIndex] = {}
    for u, v in nx.bfs_edges(g.nx_graph, q):
        parent[v] = u
        order.append(v)
    return order, parent


def tree_order_precedes(g: WeightedGraph, d1: Divisor, d2: Divisor, q: VertexIndex) -> bool:
    """d1 < d2 in the tree ordering rooted at q.

    Smaller degree comes first; at equal degree, d1 precedes d2 when it holds
    more chips at the earliest vertex (in BFS order from q) where they differ.
    """
    if d1.degree != d2.degree:
        return d1.degree < d2.degree
    order, _ = spanning_tree(g, q)
    for v in order:
        if d1[v] != d2[v]:
            return d1[v] > d2[v]
    return False
