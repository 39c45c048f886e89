"""Exception types shared across the workbench.

Every domain error derives from WorkbenchError so the CLI can map any
computation failure to exit code 2 with a stable code string (the class
name).
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NegativeRadicand(WorkbenchError):
    """Square root of a negative rational was requested."""


class UnsupportedRadicand(WorkbenchError):
    """A construction needs the square root of an irrational field element."""


class CoincidentCenters(WorkbenchError):
    """Circle intersection called with two identical centers."""


class DuplicatePoint(WorkbenchError):
    """Two input points coincide exactly; carries the offending index pair."""

    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide")
        self.indices = (i, j)


class VertexCollision(WorkbenchError):
    """A translated copy landed on an original vertex; carries the pair."""

    def __init__(self, original: int, translated: int):
        super().__init__(
            f"translate of vertex {translated} collides with vertex {original}"
        )
        self.indices = (original, translated)


class ParseError(WorkbenchError):
    """Malformed graph file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeMismatch(WorkbenchError):
    """A coloring does not have one entry per vertex."""


class BudgetExceeded(WorkbenchError):
    """Search node limit hit before an exact answer was reached."""

    def __init__(self, nodes_explored: int, limit: int):
        super().__init__(f"explored {nodes_explored} nodes, limit {limit}")
        self.nodes_explored = nodes_explored
        self.limit = limit


class NonFiniteInput(WorkbenchError):
    """A plane-coloring query received NaN or infinite coordinates."""
