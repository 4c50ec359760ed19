"""
JSON and DOT file formats.

Graphs: {"vertices": [{"id": "v1", "weight": 2}, ...],
         "edges": [{"u": "v1", "v": "v2", "weight": 1, "mult": 1}, ...]}
Divisors: {"v1": 1, "v2": -1, ...}
Actions: {"generators": [{"vertices": {...}, "half_edges": {...}}]}
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from .core.graph import WeightedGraph, build_graph
from .core.quotient import GroupAction, HalfEdgeGraph, make_generator
from .core.types import BurnReport, Divisor, JacobianDescription, Word
from .core.words import Census, PairingReport
from .exceptions import MalformedInput

PathLike = Union[str, Path]


def load_json(path: PathLike) -> Any:
    try:
        with open(path, "r", encoding="utf-8-sig") as file:
            return json.load(file)
    except FileNotFoundError:
        raise MalformedInput("file not found", str(path)) from None
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON at line {e.lineno}", str(path)) from None


def dumps(data: Any) -> str:
    """Stable JSON text: insertion-ordered keys, two-space indent."""
    return json.dumps(data, indent=2) + "\n"


def load_graph(path: PathLike) -> WeightedGraph:
    data = load_json(path)
    if not isinstance(data, dict):
        raise MalformedInput("graph file must hold an object", str(path))
    return build_graph(data)


def load_divisor(g: WeightedGraph, path: PathLike) -> Divisor:
    return divisor_from_json(g, load_json(path))


def divisor_from_json(g: WeightedGraph, data: Any) -> Divisor:
    if not isinstance(data, dict):
        raise MalformedInput("divisor must be an object of vertex id to chips", data)
    for vertex_id, value in data.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise MalformedInput("chip count must be an integer", vertex_id)
    return g.divisor(data)


def load_action(hg: HalfEdgeGraph, path: PathLike) -> GroupAction:
    return action_from_json(hg, load_json(path))


def action_from_json(hg: HalfEdgeGraph, data: Any) -> GroupAction:
    if not isinstance(data, dict) or not isinstance(data.get("generators"), list):
        raise MalformedInput("action must hold a 'generators' list")
    generators = []
    for record in data["generators"]:
        if not isinstance(record, dict):
            raise MalformedInput("generator must be an object", record)
        vertices = _id_map(record.get("vertices", {}), "vertices")
        half_edges = record.get("half_edges")
        if half_edges is not None:
            half_edges = _id_map(half_edges, "half_edges")
        generators.append(make_generator(hg, vertices, half_edges))
    return GroupAction(tuple(generators))


def _id_map(value: Any, what: str) -> Dict[str, str]:
    if not isinstance(value, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in value.items()
    ):
        raise MalformedInput(f"generator '{what}' must map ids to ids", value)
    return value


def graph_to_json(g: WeightedGraph) -> Dict[str, Any]:
    return {
        "vertices": [{"id": vertex.id, "weight": vertex.weight} for vertex in g.vertices],
        "edges": [
            {"u": g.vertices[e.u].id, "v": g.vertices[e.v].id, "weight": e.weight, "mult": e.mult}
            for e in g.edges
        ],
    }


def vector_to_json(g: WeightedGraph, vector: Optional[Sequence[int]]) -> Optional[Dict[str, int]]:
    return None if vector is None else g.labelled(vector)


def word_to_json(g: WeightedGraph, w: Word) -> List[str]:
    return [g.vertices[v].id for v in w]


def burn_report_to_json(g: WeightedGraph, report: BurnReport) -> Dict[str, Any]:
    return {
        "script": g.labelled(report.script),
        "selected": report.selected,
        "iterations": report.iterations,
        "burn_count": report.burn_count,
        "trace": [{"vertex": g.vertices[v].id, "pass": p} for v, p in report.trace],
        "candidates": [
            {"f": c.f, "script": g.labelled(c.script), "q_loss": c.q_loss, "passes": c.passes}
            for c in report.candidates
        ],
    }


def jacobian_to_json(description: JacobianDescription) -> Dict[str, Any]:
    return {"factors": list(description.factors), "order": description.order, "group": str(description)}


def census_to_json(g: WeightedGraph, census: Census) -> Dict[str, Any]:
    def entry(e: Any) -> Dict[str, Any]:
        return {
            "word": word_to_json(g, e.word),
            "divisor": g.labelled(e.divisor),
            "class_representative": g.labelled(e.class_representative),
            "verified": e.verified,
        }

    return {
        "q": g.vertices[census.q].id,
        "word_count": census.word_count,
        "distinct": census.distinct_count,
        "entries": [entry(e) for e in census.entries],
        "flagged": [entry(e) for e in census.flagged],
        "unverified": [entry(e) for e in census.unverified],
    }


def pairing_to_json(g: WeightedGraph, report: PairingReport) -> Dict[str, Any]:
    return {
        "classes": [
            {"representative": g.labelled(c.representative), "pairs": [list(p) for p in c.pairs]}
            for c in report.classes
        ],
        "canonical_guess": g.labelled(report.canonical_guess),
        "canonical_matches": list(report.canonical_matches),
        "reverse_sums": [g.labelled(s) for s in report.reverse_sums],
        "reverse_sums_agree": report.reverse_sums_agree,
    }


def graph_to_dot(g: WeightedGraph, divisor: Optional[Divisor] = None, name: str = "G") -> str:
    """Undirected DOT text; pen width and node size grow with weight."""
    lines = [f"graph {name} {{"]
    for i, vertex in enumerate(g.vertices):
        label = vertex.id if divisor is None else f"{vertex.id}\\n{divisor[i]}"
        size = 0.5 + 0.25 * (vertex.weight - 1)
        lines.append(
            f'    "{vertex.id}" [label="{label}", weight={vertex.weight}, width={size:.2f}, height={size:.2f}];'
        )
    for e in g.edges:
        for _ in range(e.mult):
            lines.append(
                f'    "{g.vertices[e.u].id}" -- "{g.vertices[e.v].id}" '
                f"[weight={e.weight}, penwidth={e.weight}];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
