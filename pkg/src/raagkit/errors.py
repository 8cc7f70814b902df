"""Exception types shared across the package."""

from __future__ import annotations


class RaagError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RaagError):
    """Malformed graph file or word text. Carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphMismatchError(RaagError):
    """Two elements from different presentations were combined."""


class ResourceCapError(RaagError):
    """An enumeration exceeded its configured cap. Never a silent truncation."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeded the cap of {cap} elements")


class InvariantViolationError(RaagError):
    """An internal invariant failed; indicates a bug or a broken caller-supplied predicate."""
