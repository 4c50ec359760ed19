"""
Named graphs shared across the test modules.
"""

import json
from pathlib import Path
from typing import Any, Callable, Dict

import pytest

from chipfire.core.graph import WeightedGraph, build_graph
from chipfire.core.quotient import GroupAction, HalfEdgeGraph, make_generator

STAR_SPEC: Dict[str, Any] = {
    "vertices": [
        {"id": "v1", "weight": 2},
        {"id": "v2", "weight": 2},
        {"id": "v3", "weight": 1},
        {"id": "v4", "weight": 1},
    ],
    "edges": [{"u": "v1", "v": "v3"}, {"u": "v2", "v": "v3"}, {"u": "v3", "v": "v4"}],
}

GSTAR_SPEC: Dict[str, Any] = {
    "vertices": [
        {"id": "v1", "weight": 2},
        {"id": "v2", "weight": 2},
        {"id": "v3", "weight": 1},
        {"id": "v4", "weight": 2},
    ],
    "edges": [
        {"u": "v1", "v": "v2", "weight": 2},
        {"u": "v2", "v": "v3"},
        {"u": "v1", "v": "v3"},
        {"u": "v3", "v": "v4"},
        {"u": "v2", "v": "v4"},
    ],
}

PENT_SPEC: Dict[str, Any] = {
    "vertices": ["u1", "u2", "u3", "u4", "u5"],
    "edges": [
        {"u": "u1", "v": "u2"},
        {"u": "u1", "v": "u3"},
        {"u": "u1", "v": "u5"},
        {"u": "u3", "v": "u2"},
        {"u": "u3", "v": "u4"},
        {"u": "u5", "v": "u4"},
    ],
}

CYC_SPEC: Dict[str, Any] = {
    "vertices": [
        {"id": "a", "weight": 1},
        {"id": "b", "weight": 2},
        {"id": "c", "weight": 1},
        {"id": "d", "weight": 1},
    ],
    "edges": [
        {"u": "a", "v": "b"},
        {"u": "b", "v": "c"},
        {"u": "c", "v": "d"},
        {"u": "d", "v": "a"},
    ],
}

TRIANGLE_SPEC: Dict[str, Any] = {
    "vertices": ["v1", "v2", "v3"],
    "edges": [{"u": "v1", "v": "v2"}, {"u": "v2", "v": "v3"}, {"u": "v1", "v": "v3"}],
}

PATH_SPEC: Dict[str, Any] = {"vertices": ["v1", "v2"], "edges": [{"u": "v1", "v": "v2"}]}

SINGLE_SPEC: Dict[str, Any] = {"vertices": ["v1"], "edges": []}

LENS_SPEC: Dict[str, Any] = {
    "vertices": [
        {"id": "A", "weight": 1},
        {"id": "B", "weight": 2},
        {"id": "C", "weight": 2},
    ],
    "edges": [
        {"u": "A", "v": "C", "weight": 1},
        {"u": "A", "v": "B", "weight": 1},
        {"u": "B", "v": "C", "weight": 2},
    ],
}

SQUARE_SPEC: Dict[str, Any] = {
    "vertices": ["v1", "v2", "v3", "v4"],
    "edges": [
        {"u": "v1", "v": "v2"},
        {"u": "v1", "v": "v3"},
        {"u": "v2", "v": "v4"},
        {"u": "v3", "v": "v4"},
        {"u": "v2", "v": "v3"},
    ],
}

CYCLE4_SPEC: Dict[str, Any] = {
    "vertices": ["v1", "v2", "v3", "v4"],
    "edges": [
        {"u": "v1", "v": "v2"},
        {"u": "v2", "v": "v3"},
        {"u": "v3", "v": "v4"},
        {"u": "v4", "v": "v1"},
    ],
}

REFLECTION = {"generators": [{"vertices": {"v1": "v4", "v4": "v1"}}]}


@pytest.fixture
def star() -> WeightedGraph:
    return build_graph(STAR_SPEC)


@pytest.fixture
def gstar() -> WeightedGraph:
    return build_graph(GSTAR_SPEC)


@pytest.fixture
def pent() -> WeightedGraph:
    return build_graph(PENT_SPEC)


@pytest.fixture
def cyc() -> WeightedGraph:
    return build_graph(CYC_SPEC)


@pytest.fixture
def triangle() -> WeightedGraph:
    return build_graph(TRIANGLE_SPEC)


@pytest.fixture
def path2() -> WeightedGraph:
    return build_graph(PATH_SPEC)


@pytest.fixture
def single() -> WeightedGraph:
    return build_graph(SINGLE_SPEC)


@pytest.fixture
def lens() -> WeightedGraph:
    """Three-vertex weighted graph obtained by folding the square."""
    return build_graph(LENS_SPEC)


@pytest.fixture
def square() -> HalfEdgeGraph:
    return HalfEdgeGraph(build_graph(SQUARE_SPEC))


@pytest.fixture
def cycle4() -> HalfEdgeGraph:
    return HalfEdgeGraph(build_graph(CYCLE4_SPEC))


@pytest.fixture
def reflection(square: HalfEdgeGraph) -> GroupAction:
    return GroupAction((make_generator(square, {"v1": "v4", "v4": "v1"}),))


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    def write(name: str, data: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write
