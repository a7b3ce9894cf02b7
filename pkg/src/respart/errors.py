"""Exception hierarchy shared by every module."""

from __future__ import annotations


class RespartError(Exception):
    """Base class for all library errors."""


class GraphError(RespartError, ValueError):
    pass


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class ParseError(RespartError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidPartition(RespartError, ValueError):
    pass


class TooLarge(RespartError, ValueError):
    pass


class InvalidRange(RespartError, ValueError):
    pass


class PreconditionViolated(RespartError, ValueError):
    """A structural precondition of an anatomy routine or construction fails."""


class NotATree(PreconditionViolated):
    pass


class IsAPath(PreconditionViolated):
    pass


class NotAPath(PreconditionViolated):
    pass


class NotAStar(PreconditionViolated):
    pass


class IsAStar(PreconditionViolated):
    pass


class NotASpider(PreconditionViolated):
    pass


class TooFewLeaves(PreconditionViolated):
    pass


class NotGeneralizedTree(PreconditionViolated):
    pass


class VerificationFailed(RespartError, AssertionError):
    """A construction produced a non-resolving partition. Always a bug."""
