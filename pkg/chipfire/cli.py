"""
Command-line front end.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import formats
from .config import SolverConfig
from .core.graph import WeightedGraph
from .core.quotient import HalfEdgeGraph, build_quotient, pushforward
from .core.solvers import (
    enumerate_q_reduced,
    is_winnable,
    jacobian,
    linear_equiv,
    local_charge,
    modified_burning,
    q_reduce,
)
from .core.types import Divisor, VertexIndex
from .core.words import divisor_of_word, enumerate_words, max_unwinnable_census, pairing_exploration
from .exceptions import ChipFireError, MalformedInput, format_error
from .log import configure_logging

logger = logging.getLogger(__name__)

COMMANDS = ("winnable", "reduce", "burn", "equiv", "jacobian", "quotient", "words", "maxunwin", "laplacian")


@dataclass(frozen=True)
class CommandRequest:
    """One parsed invocation."""

    command: str
    graph: str
    divisor: Optional[str] = None
    q: Optional[str] = None
    action: Optional[str] = None
    d1: Optional[str] = None
    d2: Optional[str] = None
    format: str = "json"
    all_reduced: bool = False


@dataclass
class Output:
    """A command's JSON payload and what to draw for --format dot."""

    payload: Dict[str, Any]
    graph: WeightedGraph
    divisor: Optional[Divisor] = None


class ChipFire:
    """Runs requests against the solvers and renders their reports."""

    def __init__(self, config: Optional[SolverConfig] = None, debug: bool = False):
        self.config = config or SolverConfig.from_env()
        self.debug = debug
        self.handlers: Dict[str, Callable[[CommandRequest], Output]] = {
            name: getattr(self, f"_{name}") for name in COMMANDS
        }

    def run(self, request: CommandRequest) -> int:
        """Execute a request, print its report and return the exit code."""
        try:
            output = self.handlers[request.command](request)
        except ChipFireError as e:
            self.report(e)
            return e.exit_code
        if request.format == "dot":
            sys.stdout.write(formats.graph_to_dot(output.graph, output.divisor))
        else:
            sys.stdout.write(formats.dumps(output.payload))
        return 0

    def report(self, error: ChipFireError) -> None:
        """Print a one-line diagnostic."""
        print(error.formatted(), file=sys.stderr)
        if self.debug:
            logger.debug("failure details", exc_info=error)

    # loading

    def _graph(self, request: CommandRequest) -> WeightedGraph:
        return formats.load_graph(request.graph)

    def _divisor(self, g: WeightedGraph, path: Optional[str], flag: str = "--divisor") -> Divisor:
        if path is None:
            raise MalformedInput(f"{flag} is required")
        return formats.load_divisor(g, path)

    def _q(self, g: WeightedGraph, request: CommandRequest) -> VertexIndex:
        if request.q is None:
            raise MalformedInput("--q is required")
        return g.vertex_index(request.q)

    # commands

    def _winnable(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        d = self._divisor(g, request.divisor)
        result = is_winnable(g, d, self.config)
        payload = {
            "winnable": result.winnable,
            "witness": formats.vector_to_json(g, result.witness),
            "script": formats.vector_to_json(g, result.script),
            "reduced": formats.vector_to_json(g, result.reduced),
        }
        return Output(payload, g, result.witness if result.witness is not None else d)

    def _reduce(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        d = self._divisor(g, request.divisor)
        q = self._q(g, request)
        reduction = q_reduce(g, d, q, self.config)
        payload: Dict[str, Any] = {
            "q": g.vertices[q].id,
            "reduced": g.labelled(reduction.divisor),
            "script": g.labelled(reduction.script),
            "rounds": reduction.rounds,
        }
        if request.all_reduced:
            found = enumerate_q_reduced(g, d, q, self.config)
            payload["local_charge"] = local_charge(g, q)
            payload["representatives"] = [{"f": f, "divisor": g.labelled(found[f])} for f in sorted(found)]
        return Output(payload, g, reduction.divisor)

    def _burn(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        d = self._divisor(g, request.divisor)
        report = modified_burning(g, d, self._q(g, request))
        return Output(formats.burn_report_to_json(g, report), g, d)

    def _equiv(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        d1 = self._divisor(g, request.d1, "--d1")
        d2 = self._divisor(g, request.d2, "--d2")
        script = linear_equiv(g, d1, d2)
        payload = {
            "equivalent": script is not None,
            "script": "not-equivalent" if script is None else g.labelled(script),
        }
        return Output(payload, g, d1)

    def _jacobian(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        return Output(formats.jacobian_to_json(jacobian(g)), g)

    def _quotient(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        if request.action is None:
            raise MalformedInput("--action is required")
        hg = HalfEdgeGraph(g)
        action = formats.load_action(hg, request.action)
        quotient = build_quotient(hg, action, self.config)
        payload = formats.graph_to_json(quotient)
        pushed = None
        if request.divisor is not None:
            pushed = pushforward(hg, action, self._divisor(g, request.divisor), self.config)
            payload["pushforward"] = quotient.labelled(pushed)
        return Output(payload, quotient, pushed)

    def _words(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        q = self._q(g, request)
        words = [
            {"word": formats.word_to_json(g, w), "divisor": g.labelled(divisor_of_word(g, w))}
            for w in enumerate_words(g, q)
        ]
        return Output({"q": g.vertices[q].id, "words": words}, g)

    def _maxunwin(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        census = max_unwinnable_census(g, self._q(g, request), self.config)
        payload = {
            "census": formats.census_to_json(g, census),
            "pairing": formats.pairing_to_json(g, pairing_exploration(g, census)),
        }
        return Output(payload, g, census.entries[0].divisor if census.entries else None)

    def _laplacian(self, request: CommandRequest) -> Output:
        g = self._graph(request)
        return Output({"vertices": list(g.ids), "matrix": g.laplacian.to_lists()}, g)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, help="graph JSON file")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--debug", action="store_true", help="log solver progress to stderr")
    common.add_argument("--round-cap", type=int, help="maximum burning rounds per reduction")
    common.add_argument("--order-cap", type=int, help="maximum group order for quotients")

    parser = argparse.ArgumentParser(prog="chipfire", description="Chip-firing on weighted graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=text)

    command("winnable", "decide winnability").add_argument("--divisor")
    reduce_parser = command("reduce", "q-reduce a divisor")
    reduce_parser.add_argument("--divisor")
    reduce_parser.add_argument("--q")
    reduce_parser.add_argument("--all", dest="all_reduced", action="store_true",
                               help="list every q-reduced divisor of the class")
    burn_parser = command("burn", "run the modified burning algorithm")
    burn_parser.add_argument("--divisor")
    burn_parser.add_argument("--q")
    equiv_parser = command("equiv", "test linear equivalence")
    equiv_parser.add_argument("--d1")
    equiv_parser.add_argument("--d2")
    command("jacobian", "invariant factors of the Jacobian")
    quotient_parser = command("quotient", "quotient by a group action")
    quotient_parser.add_argument("--action")
    quotient_parser.add_argument("--divisor")
    command("words", "enumerate words and their divisors").add_argument("--q")
    command("maxunwin", "maximal unwinnable census and pairing").add_argument("--q")
    command("laplacian", "print the weighted Laplacian")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.debug)
    try:
        config = SolverConfig.from_env().with_caps(args.order_cap, args.round_cap)
    except ChipFireError as e:
        print(e.formatted(), file=sys.stderr)
        return e.exit_code
    for flag, value in (("--round-cap", args.round_cap), ("--order-cap", args.order_cap)):
        if value is not None and value < 1:
            print(format_error(f"{flag} must be positive", value, "Input Error"), file=sys.stderr)
            return 2
    options = vars(args)
    fields: List[str] = ["divisor", "q", "action", "d1", "d2", "all_reduced"]
    request = CommandRequest(
        args.command,
        args.graph,
        format=args.format,
        **{name: options[name] for name in fields if name in options},
    )
    return ChipFire(config, debug=args.debug).run(request)


if __name__ == "__main__":
    sys.exit(main())
