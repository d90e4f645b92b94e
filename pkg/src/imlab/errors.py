"""Exception hierarchy shared by the solvers, checks and CLI."""

from __future__ import annotations


class ImlabError(Exception):
    """Base class for every error raised by this package."""


class GraphError(ImlabError, ValueError):
    """Invalid graph construction (loops, out-of-range endpoints, bad parameters)."""


class Graph6Error(GraphError):
    """Malformed graph6 text. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceeded(ImlabError):
    """An exact solver hit its search-node or enumeration budget.

    ``field`` names the invariant being computed when the budget ran out.
    """

    def __init__(self, field: str, limit: int, what: str = "nodes"):
        super().__init__(f"{field}: budget of {limit} {what} exceeded")
        self.field = field
        self.limit = limit


class ContractError(ImlabError, ValueError):
    """A documented precondition of an operation does not hold."""


class NotApplicable(ImlabError):
    """The requested quantity is undefined for this graph (e.g. delta = 0 for the ratio bound)."""


class DefectError(ImlabError):
    """A proven inequality or internal invariant failed. This is always an implementation bug."""
