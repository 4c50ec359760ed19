"""
Custom exceptions for the chip-firing toolkit.
"""

from typing import Any

from colorama import Fore, Style, init

# Initialize colorama
init()


class Colors:
    ERROR = Fore.RED
    WARNING = Fore.YELLOW
    INFO = Fore.BLUE
    SUCCESS = Fore.GREEN
    RESET = Style.RESET_ALL
    BOLD = Style.BRIGHT


def format_error(message: str, entity: Any = None, error_type: str = "Error") -> str:
    """Format an error message with colors and the offending entity."""
    error_prefix = f"{Colors.ERROR}{Colors.BOLD}{error_type}:{Colors.RESET} "
    if entity is not None:
        return f"{error_prefix}{message} ({entity})"
    return f"{error_prefix}{message}"


class ChipFireError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1
    error_type = "Error"

    def __init__(self, message: str, entity: Any = None):
        self.message = message
        self.entity = entity
        suffix = f" ({entity})" if entity is not None else ""
        super().__init__(f"{message}{suffix}")

    def formatted(self) -> str:
        """One-line coloured diagnostic."""
        return format_error(self.message, self.entity, self.error_type)


# Input validation: exit code 2


class InputError(ChipFireError):
    """Raised when an input file, graph or argument is invalid."""

    exit_code = 2
    error_type = "Input Error"


class MalformedInput(InputError):
    """Raised when a file does not parse or misses required fields."""


class UnknownVertex(InputError):
    """Raised when a vertex id does not name a vertex of the graph."""


class LoopEdge(InputError):
    """Raised when an edge has equal endpoints."""


class DisconnectedGraph(InputError):
    """Raised when the underlying graph is not connected."""


class DivisibilityViolation(InputError):
    """Raised when an edge weight does not divide an endpoint weight."""


class NonPositiveWeight(InputError):
    """Raised when a vertex or edge weight (or multiplicity) is below 1."""


class DimensionMismatch(InputError):
    """Raised when a vector length differs from the vertex count."""


class InvalidWord(InputError):
    """Raised when a word violates the charge multiplicities."""


class ActionError(InputError):
    """Raised when a group action is not admissible."""


class NotAutomorphism(ActionError):
    """Raised when a generator does not preserve roots or the involution."""


class HalfEdgeToInvolution(ActionError):
    """Raised when a group element maps a half-edge to its partner."""


class VertexToNeighbor(ActionError):
    """Raised when a group element maps a vertex to an adjacent vertex."""


# Computation limits: exit code 3


class ComputationError(ChipFireError):
    """Raised when a computation hits a configured limit."""

    exit_code = 3
    error_type = "Computation Error"


class IterationCapExceeded(ComputationError):
    """Raised when an iterative solver exceeds its round cap."""


class GroupOrderCapExceeded(ComputationError):
    """Raised when a group closure exceeds the configured order cap."""


# Preconditions: exit code 4


class PreconditionError(ChipFireError):
    """Raised when an operation's precondition does not hold."""

    exit_code = 4
    error_type = "Precondition Error"


class NotQEffective(PreconditionError):
    """Raised when a divisor is in debt away from q."""


class NotQReduced(PreconditionError):
    """Raised when a divisor is expected to be q-reduced but is not."""


class ChargeAtQNotOne(PreconditionError):
    """Raised when word constructions are asked for a vertex with c(q) > 1."""


class BoxTooSmallWarning(UserWarning):
    """Emitted when a bounded search contradicts a supplied certificate."""

