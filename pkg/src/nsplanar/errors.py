"""Shared exception types."""

from __future__ import annotations


class NsplanarError(Exception):
    """Base class for package errors."""


class GraphTooLargeError(NsplanarError):
    """Raised when an exact procedure is asked to exceed its size limit."""


class GraphFormatError(NsplanarError):
    """Malformed graph6/sparse6/edge-list input.

    ``offset`` is the byte position at which parsing failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceededError(NsplanarError):
    """A bounded search ran out of nodes or time.

    This is an explicit "inconclusive": callers must never interpret it
    as a negative answer.
    """

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class ClosureBudgetError(NsplanarError):
    """Move closure grew past its graph-count budget.

    ``partial`` holds the (incomplete) set discovered so far.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []


class IntegrityError(NsplanarError):
    """Two mutually exclusive certificates both validated."""
