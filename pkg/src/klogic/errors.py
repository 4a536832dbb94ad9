"""Exception types shared across the engine modules."""

from __future__ import annotations


class LogicError(Exception):
    """Base class for all errors raised by this package."""


class ModalOperatorPresent(LogicError):
    """A K-free operation received a formula containing the knowledge operator."""


class UnknownAtom(LogicError):
    """A formula mentions an atom the valuation or model does not assign."""


class AtomLimitExceeded(LogicError):
    """The combined atom count is above the configured enumeration limit."""


class KindMismatch(LogicError):
    """An observable-pair operation received the wrong (kind, kind) combination."""


class DisjointIntervals(LogicError):
    """Interval union requested for intervals whose union is not an interval."""


class DuplicateAtom(LogicError):
    """Two declared propositions share an atom name."""


class InputFileError(LogicError):
    """A declaration, theory, or constraints file failed to parse.

    Carries the source location so command-line output can point at the line.
    """

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")
