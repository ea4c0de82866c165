"""Exception types shared across the toolkit."""

from __future__ import annotations


class HerdError(Exception):
    """Base class for all toolkit errors."""


class DomainError(HerdError, ValueError):
    """An input violates a physical or mathematical precondition."""


class ParseError(HerdError, ValueError):
    """Malformed input text (design files, spec files, Touchstone data).

    ``line`` is the 1-based line number where parsing failed, or 0 when the
    failure is not tied to a specific line.
    """

    def __init__(self, message: str, line: int = 0):
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasibleDesignError(HerdError):
    """Synthesis cannot satisfy the requested targets; names the binding constraint."""
