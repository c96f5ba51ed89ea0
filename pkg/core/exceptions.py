"""
Simplex Toolkit Exceptions

Exception hierarchy for the integer simplex toolkit.
Every error carries a machine-readable code and the CLI exit status it maps to.
"""

from typing import Any, Dict, Optional


class SimplexError(Exception):
    """Base exception for all toolkit errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = 1,
        error_code: Optional[str] = None
    ):
        """
        Initialize toolkit error.

        Args:
            message: Human-readable error message
            exit_code: CLI exit status for this error (default: 1, usage error)
            error_code: Machine-readable error code
        """
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code or self.__class__.__name__
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for JSON output."""
        return {
            "error": self.error_code,
            "message": self.message,
            "exit_code": self.exit_code
        }


class InvalidParamsError(SimplexError):
    """Raised when (n, m) does not describe a valid instance."""

    def __init__(self, message: str = "Invalid instance parameters"):
        super().__init__(message=message, error_code="invalid_params")


class InvalidVertexError(SimplexError):
    """Raised when a coordinate tuple violates a vertex invariant."""

    def __init__(
        self,
        message: str = "Invalid vertex",
        invariant: Optional[str] = None
    ):
        self.invariant = invariant
        if invariant:
            message = f"{message} (violates {invariant} invariant)"
        super().__init__(message=message, error_code="invalid_vertex")


class VertexFormatError(SimplexError):
    """Raised when a textual vertex cannot be parsed."""

    def __init__(self, text: str, expected: str = "comma-separated integers"):
        super().__init__(
            message=f"Cannot parse vertex {text!r}: expected {expected}",
            error_code="vertex_format"
        )


class ParamsMismatchError(SimplexError):
    """Raised when two vertices belong to different instances."""

    def __init__(self, first: Any = None, second: Any = None):
        message = "Vertices belong to different instances"
        if first is not None and second is not None:
            message = f"{message}: {first} vs {second}"
        super().__init__(message=message, error_code="params_mismatch")


class IdenticalEndpointsError(SimplexError):
    """Raised when an operation needs two distinct endpoints."""

    def __init__(self, vertex: Any = None):
        message = "Endpoints must be distinct"
        if vertex is not None:
            message = f"{message}, got {vertex} twice"
        super().__init__(message=message, error_code="identical_endpoints")


class RotationRangeError(SimplexError):
    """Raised when a rotation number is outside 1..|positions|."""

    def __init__(self, rotation: int, size: int):
        self.rotation = rotation
        self.size = size
        super().__init__(
            message=f"Rotation {rotation} out of range 1..{size}",
            error_code="rotation_out_of_range"
        )


class NotEqualPositionError(SimplexError):
    """Raised when a detour index is not an equal coordinate of the pair."""

    def __init__(self, index: int, equal: Any = None):
        message = f"Index {index} is not an equal position"
        if equal is not None:
            message = f"{message}. Equal positions: {sorted(equal)}"
        super().__init__(message=message, error_code="not_equal_position")


class FaultyEndpointError(SimplexError):
    """Raised when a route or distance query names a faulty endpoint."""

    def __init__(self, vertex: Any):
        super().__init__(
            message=f"Endpoint {vertex} is in the fault set",
            error_code="faulty_endpoint"
        )


class FaultBudgetError(SimplexError):
    """Raised when a fault set is too large for the container guarantee."""

    def __init__(self, faults: int, limit: int):
        super().__init__(
            message=f"Fault set of size {faults} exceeds guarantee limit {limit}",
            error_code="fault_budget"
        )


class WidthRangeError(SimplexError):
    """Raised when a width omega is outside its admissible range."""

    def __init__(self, omega: int, low: int, high: int):
        super().__init__(
            message=f"Width {omega} out of range {low}..{high}",
            error_code="width_out_of_range"
        )


class TrivialGraphError(SimplexError):
    """Raised when fewer than two vertices remain to measure."""

    def __init__(self, message: str = "Graph has fewer than 2 vertices"):
        super().__init__(message=message, error_code="trivial_graph")


class SearchBudgetExceededError(SimplexError):
    """Raised when an exhaustive search exceeds its node-expansion budget."""

    def __init__(self, expansions: int, budget: int, context: Optional[str] = None):
        self.expansions = expansions
        self.budget = budget
        message = f"Search budget exceeded: {expansions} expansions > {budget}"
        if context:
            message = f"{message} ({context})"
        super().__init__(
            message=message,
            exit_code=3,
            error_code="search_budget_exceeded"
        )


def create_simplex_exception(
    error_type: str,
    message: Optional[str] = None,
    **kwargs
) -> SimplexError:
    """
    Create the toolkit exception matching an error type.

    Args:
        error_type: Type of error (params, vertex, mismatch, budget, etc.)
        message: Optional custom message (only for message-based errors)
        **kwargs: Additional parameters for specific exceptions

    Returns:
        Appropriate SimplexError subclass instance

    Example:
        >>> exc = create_simplex_exception("budget", expansions=11, budget=10)
        >>> exc.exit_code
        3
    """
    exception_map = {
        "params": InvalidParamsError,
        "vertex": InvalidVertexError,
        "format": VertexFormatError,
        "mismatch": ParamsMismatchError,
        "identical": IdenticalEndpointsError,
        "rotation": RotationRangeError,
        "not_equal": NotEqualPositionError,
        "faulty_endpoint": FaultyEndpointError,
        "fault_budget": FaultBudgetError,
        "width": WidthRangeError,
        "trivial": TrivialGraphError,
        "budget": SearchBudgetExceededError,
    }

    exception_class = exception_map.get(error_type, SimplexError)

    if message:
        return exception_class(message, **kwargs)
    return exception_class(**kwargs)
