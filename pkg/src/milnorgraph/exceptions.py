"""Exception hierarchy.

Input problems (bad documents, violated preconditions, size caps) derive from
``ValueError``.  ``TheoremViolation`` is reserved for results that contradict a
proven statement about graphic arrangements; seeing one means a bug here, not
bad input.
"""


class MilnorGraphError(Exception):
    """Base class for all package errors."""


class GraphFormatError(MilnorGraphError, ValueError):
    """Malformed or inconsistent graph document."""


class PreconditionError(MilnorGraphError, ValueError):
    """An operation was called outside its domain."""


class CapExceeded(PreconditionError):
    """A desk-scale size cap was exceeded."""


class TheoremViolation(MilnorGraphError, RuntimeError):
    """A computed value contradicts a known theorem (internal bug sentinel)."""
