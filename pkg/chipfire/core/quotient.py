"""
Group actions on graphs and the weighted quotients they produce.

The base graph is viewed through its half-edges: edge k contributes "e{k}a"
rooted at its first endpoint and "e{k}b" rooted at its second, each the
involution partner of the other. A group acting on vertices and half-edges
collapses to a weighted graph whose vertex and edge weights are stabilizer
orders.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from ..config import DEFAULT_CONFIG, SolverConfig
from ..exceptions import (
    GroupOrderCapExceeded,
    HalfEdgeToInvolution,
    MalformedInput,
    NotAutomorphism,
    VertexToNeighbor,
)
from .graph import Edge, Vertex, WeightedGraph
from .types import Divisor, VertexIndex

logger = logging.getLogger(__name__)

HalfEdge = int


@dataclass(frozen=True)
class HalfEdgeGraph:
    """A weighted graph seen through its half-edges; every edge must have mult 1."""

    graph: WeightedGraph

    def __post_init__(self) -> None:
        for edge in self.graph.edges:
            if edge.mult != 1:
                raise MalformedInput(
                    "parallel edges must be listed one per entry for group actions",
                    self.graph.edge_label(edge),
                )
        if any(w != 1 for w in self.graph.weights):
            logger.warning("group action on a graph with non-unit vertex weights; weights are ignored")

    @property
    def half_edge_count(self) -> int:
        return 2 * len(self.graph.edges)

    @cached_property
    def half_edge_ids(self) -> Tuple[str, ...]:
        return tuple(f"e{k}{side}" for k in range(len(self.graph.edges)) for side in "ab")

    @cached_property
    def half_edge_index(self) -> Dict[str, HalfEdge]:
        return {name: h for h, name in enumerate(self.half_edge_ids)}

    def root(self, h: HalfEdge) -> VertexIndex:
        edge = self.graph.edges[h // 2]
        return edge.u if h % 2 == 0 else edge.v

    @staticmethod
    def partner(h: HalfEdge) -> HalfEdge:
        return h ^ 1

    def half_edge(self, name: str) -> HalfEdge:
        try:
            return self.half_edge_index[name]
        except KeyError:
            raise MalformedInput("no such half-edge", name) from None


@dataclass(frozen=True)
class GroupElement:
    """A permutation of vertices together with one of half-edges."""

    vertices: Tuple[VertexIndex, ...]
    half_edges: Tuple[HalfEdge, ...]

    @classmethod
    def identity(cls, n: int, h: int) -> "GroupElement":
        return cls(tuple(range(n)), tuple(range(h)))

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self after other."""
        return GroupElement(
            tuple(self.vertices[x] for x in other.vertices),
            tuple(self.half_edges[x] for x in other.half_edges),
        )


@dataclass(frozen=True)
class GroupAction:
    """A group given by generators."""

    generators: Tuple[GroupElement, ...]


def _induced_half_edges(hg: HalfEdgeGraph, vertices: Sequence[VertexIndex]) -> Tuple[HalfEdge, ...]:
    edges = hg.graph.edges
    image: List[HalfEdge] = []
    for k, edge in enumerate(edges):
        gu, gv = vertices[edge.u], vertices[edge.v]
        targets = [j for j, other in enumerate(edges) if {other.u, other.v} == {gu, gv}]
        if len(targets) > 1:
            raise MalformedInput("half-edge map is ambiguous on parallel edges; list it", hg.graph.edge_label(edge))
        if not targets:
            raise NotAutomorphism("vertex map does not send edges to edges", hg.graph.edge_label(edge))
        j = targets[0]
        a = 2 * j if edges[j].u == gu else 2 * j + 1
        image.extend([a, a ^ 1])
    return tuple(image)


def make_generator(
    hg: HalfEdgeGraph,
    vertices: Mapping[str, str],
    half_edges: Optional[Mapping[str, str]] = None,
) -> GroupElement:
    """Generator from id maps; unlisted vertices and half-edges are fixed."""
    graph = hg.graph
    vertex_image = list(range(graph.n))
    for source, target in vertices.items():
        vertex_image[graph.vertex_index(source)] = graph.vertex_index(target)
    if half_edges is None:
        half_image = _induced_half_edges(hg, vertex_image)
    else:
        half_list = list(range(hg.half_edge_count))
        for source, target in half_edges.items():
            half_list[hg.half_edge(source)] = hg.half_edge(target)
        half_image = tuple(half_list)
    return GroupElement(tuple(vertex_image), half_image)


def _check_generator(hg: HalfEdgeGraph, index: int, element: GroupElement) -> None:
    graph = hg.graph
    if len(element.vertices) != graph.n or sorted(element.vertices) != list(range(graph.n)):
        raise MalformedInput("vertex map is not a permutation", f"generator {index}")
    if len(element.half_edges) != hg.half_edge_count or sorted(element.half_edges) != list(range(hg.half_edge_count)):
        raise MalformedInput("half-edge map is not a permutation", f"generator {index}")
    for h, image in enumerate(element.half_edges):
        if hg.root(image) != element.vertices[hg.root(h)]:
            raise NotAutomorphism("root map not preserved", f"generator {index} at {hg.half_edge_ids[h]}")
        if element.half_edges[hg.partner(h)] != hg.partner(image):
            raise NotAutomorphism("involution not preserved", f"generator {index} at {hg.half_edge_ids[h]}")


@lru_cache(maxsize=64)
def _closure(hg: HalfEdgeGraph, action: GroupAction, cap: int) -> Tuple[GroupElement, ...]:
    identity = GroupElement.identity(hg.graph.n, hg.half_edge_count)
    seen = {identity: None}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for generator in action.generators:
            product = generator.compose(element)
            if product not in seen:
                if len(seen) >= cap:
                    raise GroupOrderCapExceeded("group closure exceeds the order cap", cap)
                seen[product] = None
                queue.append(product)
    logger.debug("group closure has order %d", len(seen))
    return tuple(seen)


def _element_label(hg: HalfEdgeGraph, element: GroupElement) -> str:
    moved = [
        f"{hg.graph.vertices[v].id}->{hg.graph.vertices[image].id}"
        for v, image in enumerate(element.vertices)
        if v != image
    ]
    return "{" + ", ".join(moved) + "}" if moved else "identity"


def validate_action(
    hg: HalfEdgeGraph, action: GroupAction, config: SolverConfig = DEFAULT_CONFIG
) -> Tuple[GroupElement, ...]:
    """Check generators are automorphisms and the closed group is admissible.

    Returns every group element. Admissible means no element sends a half-edge
    to its partner and no element sends a vertex to a neighbour.
    """
    for index, generator in enumerate(action.generators):
        _check_generator(hg, index, generator)
    group = _closure(hg, action, config.group_order_cap)
    for element in group:
        for h, image in enumerate(element.half_edges):
            if image == hg.partner(h):
                raise HalfEdgeToInvolution(
                    f"{hg.half_edge_ids[h]} is sent to its partner", _element_label(hg, element)
                )
        for v, image in enumerate(element.vertices):
            if hg.graph.is_adjacent(v, image):
                raise VertexToNeighbor(
                    f"{hg.graph.vertices[v].id} is sent to neighbour {hg.graph.vertices[image].id}",
                    _element_label(hg, element),
                )
    return group


@dataclass(frozen=True)
class OrbitData:
    """Orbits ordered by their smallest member, with stabilizer orders."""

    group_order: int
    vertex_orbits: Tuple[Tuple[VertexIndex, ...], ...]
    vertex_stabilizers: Tuple[int, ...]
    edge_orbits: Tuple[Tuple[int, ...], ...]
    edge_stabilizers: Tuple[int, ...]
    edge_representatives: Tuple[HalfEdge, ...]

    @cached_property
    def vertex_orbit_of(self) -> Dict[VertexIndex, int]:
        return {v: i for i, orbit in enumerate(self.vertex_orbits) for v in orbit}


def orbits_and_stabilizers(
    hg: HalfEdgeGraph, action: GroupAction, config: SolverConfig = DEFAULT_CONFIG
) -> OrbitData:
    group = validate_action(hg, action, config)
    order = len(group)
    vertex_orbits: List[Tuple[VertexIndex, ...]] = []
    placed: Set[VertexIndex] = set()
    for v in range(hg.graph.n):
        if v not in placed:
            orbit = tuple(sorted({element.vertices[v] for element in group}))
            placed.update(orbit)
            vertex_orbits.append(orbit)
    edge_orbits: List[Tuple[int, ...]] = []
    edge_stabilizers: List[int] = []
    representatives: List[HalfEdge] = []
    placed_half: Set[HalfEdge] = set()
    for h in range(hg.half_edge_count):
        if h in placed_half:
            continue
        half_orbit = {element.half_edges[h] for element in group}
        partner_orbit = {hg.partner(x) for x in half_orbit}
        placed_half.update(half_orbit | partner_orbit)
        edge_orbits.append(tuple(sorted({x // 2 for x in half_orbit})))
        edge_stabilizers.append(order // len(half_orbit))
        representatives.append(h)
    return OrbitData(
        order,
        tuple(vertex_orbits),
        tuple(order // len(orbit) for orbit in vertex_orbits),
        tuple(edge_orbits),
        tuple(edge_stabilizers),
        tuple(representatives),
    )


def build_quotient(
    hg: HalfEdgeGraph, action: GroupAction, config: SolverConfig = DEFAULT_CONFIG
) -> WeightedGraph:
    """One vertex per vertex orbit, one edge per edge orbit, weights |Stab|."""
    data = orbits_and_stabilizers(hg, action, config)
    ids = hg.graph.ids
    vertices = tuple(
        Vertex("+".join(ids[v] for v in orbit), weight)
        for orbit, weight in zip(data.vertex_orbits, data.vertex_stabilizers)
    )
    edges = tuple(
        Edge(data.vertex_orbit_of[hg.root(h)], data.vertex_orbit_of[hg.root(hg.partner(h))], weight)
        for h, weight in zip(data.edge_representatives, data.edge_stabilizers)
    )
    # validation re-checks edge weights divide vertex weights
    quotient = WeightedGraph(vertices, edges)
    logger.debug("quotient of order-%d action: %d vertices, %d edges", data.group_order, quotient.n, len(edges))
    return quotient


def pushforward(
    hg: HalfEdgeGraph, action: GroupAction, d: Divisor, config: SolverConfig = DEFAULT_CONFIG
) -> Divisor:
    """Sum chips over each vertex orbit."""
    hg.graph.check_vector(d)
    data = orbits_and_stabilizers(hg, action, config)
    return Divisor(tuple(sum(d[v] for v in orbit) for orbit in data.vertex_orbits))
