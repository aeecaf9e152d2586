"""Exception hierarchy shared by every module."""

from __future__ import annotations


class IsolationError(Exception):
    """Base class for all errors raised by isolation_kit."""


class GraphValidationError(IsolationError, ValueError):
    """Malformed graph, vertex set, edge set or pattern."""


class UnsupportedError(IsolationError):
    """Input exceeds a desk-scale limit (vertex count, pattern size, ...)."""


class EdgeListError(GraphValidationError):
    """Ill-formed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SolverError(IsolationError):
    """Raised by the constructive solver.

    Attributes:
        kind: one of ``SpecialPairInput``, ``ProofInvariantViolated``,
            ``PatternTooSmall``.
        trace: snapshot of the case steps taken before the failure.
    """

    kind = "SolverError"

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = list(trace) if trace is not None else []


class SpecialPairInput(SolverError):
    kind = "SpecialPairInput"


class PatternTooSmall(SolverError):
    kind = "PatternTooSmall"


class ProofInvariantViolated(SolverError):
    kind = "ProofInvariantViolated"
