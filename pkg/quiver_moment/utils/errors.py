"""Exception types and structured error responses"""

from typing import Any, Dict, List, Optional


class QuiverError(ValueError):
    """Base class for every error raised by quiver_moment.

    Subclasses ValueError so callers that already guard input handling with
    ``except ValueError`` keep working.
    """


class InvalidInputError(QuiverError):
    """A (quiver, dimension vector, weight) triple violates an invariant."""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("Invalid input: " + "; ".join(self.violations))


class ShapeMismatchError(QuiverError):
    """A matrix family does not match the quiver and dimension vector."""


class SingularElementError(QuiverError):
    """A group element has a (numerically) singular component."""

    def __init__(self, vertex: str, rcond: float):
        self.vertex = vertex
        self.rcond = rcond
        super().__init__(
            f"Group element component at vertex '{vertex}' is singular "
            f"(reciprocal condition {rcond:.3e})"
        )


class NotSkewHermitianError(QuiverError):
    """A Lie algebra element is not skew-Hermitian within tolerance."""


class NotUnitaryError(QuiverError):
    """A group element is not unitary within tolerance."""


class CyclicQuiverError(QuiverError):
    """An operation that needs an acyclic quiver was given one with a cycle."""

    def __init__(self, cycle: Optional[List[str]] = None):
        self.cycle = list(cycle or [])
        detail = f" ({' '.join(self.cycle)})" if self.cycle else ""
        super().__init__(f"quiver has a cycle{detail}")


class EmptyArrowSetError(QuiverError):
    """An operation that needs at least one arrow was given none."""


class NotKroneckerError(QuiverError):
    """The quiver is not a Kronecker quiver with positive dimensions."""


class SpecParseError(QuiverError):
    """Parse error in a quiver or representation file, with its location."""

    def __init__(self, message: str, line: int, column: int = 1, path: str = "<input>"):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super().__init__(f"{path}:{line}:{column}: {message}")


def get_error_suggestion(error_type: str, message: str) -> str:
    """
    Provide a helpful suggestion based on the error type.

    Args:
        error_type: Name of the exception class
        message: The error message

    Returns:
        Suggestion string
    """
    if error_type == "SpecParseError":
        if "rational" in message.lower():
            return "Weights are integers or fractions p/q with q != 0, e.g. 3, -1/2"
        return "Sections are [vertices] (id dim theta), [arrows] (id src tgt) and [options] (name value)"
    elif error_type == "InvalidInputError":
        return "Run validate on the file to list every violation"
    elif error_type == "ShapeMismatchError":
        return "Each arrow matrix needs d_target rows and d_source columns"
    elif error_type == "CyclicQuiverError":
        return "Coercivity certificates exist only for acyclic supports; use analyze instead"
    elif error_type == "NotKroneckerError":
        return "The Kronecker bound needs two vertices with all arrows a -> b and d_a, d_b >= 1"
    elif error_type in ("NotSkewHermitianError", "NotUnitaryError", "SingularElementError"):
        return "Check the matrices or loosen the tolerance in the [options] section"
    else:
        return "Check the file format described in README.md"


def handle_error(e: Exception) -> Dict[str, Any]:
    """
    Structured error response for tool callers.

    Args:
        e: The exception that occurred

    Returns:
        Structured error response dictionary
    """
    error_type = type(e).__name__
    response: Dict[str, Any] = {
        "status": "error",
        "error": True,
        "message": str(e),
        "type": error_type,
        "suggestion": get_error_suggestion(error_type, str(e)),
    }
    if isinstance(e, InvalidInputError):
        response["violations"] = e.violations
    if isinstance(e, SpecParseError):
        response["location"] = {"line": e.line, "column": e.column}
    return response
