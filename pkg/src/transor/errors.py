"""Exception types shared across the package."""


class TransorError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TransorError):
    """Malformed graph or orientation input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


class DomainError(TransorError):
    """A precondition on an operation's arguments was violated."""


class OracleScaleError(TransorError):
    """Input exceeds a hard brute-force size guard."""


class InvariantError(TransorError):
    """An internal cross-check failed; indicates a bug, not bad input."""
