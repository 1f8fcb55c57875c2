"""Exception types shared across the package."""


class TieVoteError(Exception):
    """Base class for all package-specific errors."""


class ParseError(TieVoteError):
    """Malformed input text; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(TieVoteError):
    """Input parsed but violates a semantic constraint."""


class CapacityError(TieVoteError):
    """Exhaustive search requested beyond the configured desk-scale cap."""


class NotApplicableError(TieVoteError):
    """A polynomial-time solver's preconditions do not hold for the instance."""
