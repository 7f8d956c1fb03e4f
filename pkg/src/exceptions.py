"""custom exceptions, so that every deliberate failure carries a title, a body and a hint"""

__all__ = [
    "ParkExtException",
    "InvalidInputError",
    "GuardExceededError",
    "NotACharacterError",
    "NonInvariantSubspaceError",
    "BudgetExhaustedError",
]


class ParkExtException(Exception):
    """Base class for errors raised on purpose by parkext.

    Mirrors a styled error card: `title` is the headline, `message` the body
    and `fix` an optional hint shown as a footer by the CLI.
    """

    def __init__(self, title="Error", message=None, fix=None, level="danger"):
        super().__init__(message or title)
        self.title = title
        self.body = message or ""
        self.footer = fix
        # accepted: danger | warning | info
        self.level = level

    def render(self) -> str:
        """one block of plain text, used by the CLI"""
        lines = [f"{self.title}: {self.body}" if self.body else self.title]
        if self.footer:
            lines.append(f"  fix: {self.footer}")
        return "\n".join(lines)


class InvalidInputError(ParkExtException):
    """Malformed partitions, labelings, parameters or mismatched sizes."""

    def __init__(self, message=None, fix=None):
        super().__init__(title="Invalid input", message=message, fix=fix)


class GuardExceededError(ParkExtException):
    """A configured size guard would be exceeded."""

    def __init__(self, message=None, fix=None, *, guard: str | None = None):
        super().__init__(
            title="Size guard exceeded",
            message=message,
            fix=fix
            or "raise the guard with a keyword argument, a CLI flag or `parkext config set`",
        )
        self.guard = guard


class NotACharacterError(ParkExtException):
    """A class function whose multiplicities are not nonnegative integers."""

    def __init__(self, message=None, fix=None):
        super().__init__(title="Not a character", message=message, fix=fix)


class NonInvariantSubspaceError(ParkExtException):
    """A group element moved a basis vector outside the span."""

    def __init__(self, message=None, fix=None):
        super().__init__(
            title="Span is not invariant",
            message=message,
            fix=fix or "S_{n+1} only acts when ell == m; use group='S_n'",
        )


class BudgetExhaustedError(ParkExtException):
    """The feasibility search ran out of nodes before reaching a verdict."""

    def __init__(self, message=None, fix=None, *, nodes_explored: int = 0):
        super().__init__(
            title="Search inconclusive",
            message=message,
            fix=fix or "raise node_budget (PARKEXT_NODE_BUDGET or --node-budget)",
            level="warning",
        )
        self.nodes_explored = nodes_explored
