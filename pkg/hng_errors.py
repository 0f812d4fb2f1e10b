"""Exception types raised by the hng modules.

All of them derive from ``ValueError`` so callers that only care about bad
input can keep catching that. The CLI maps them onto exit codes.
"""
from __future__ import annotations

from typing import Optional


class HngError(ValueError):
    """Root of every error raised on purpose by this package."""


class ParameterOutOfRange(HngError):
    pass


class OrderCapExceeded(HngError):
    pass


class InvalidVertex(HngError):
    pass


class MalformedGraph6(HngError):
    pass


class CorruptCatalog(HngError):
    pass


class StaleCache(CorruptCatalog):
    """A cached file was written under a different format version."""


class NotInClass(HngError):
    pass


class TooManyEdges(HngError):
    pass


class InvalidFamilyType(HngError):
    pass


class MissingObstructionSet(HngError):
    pass


class MissingDependency(HngError):
    """A prerequisite artifact is absent; ``hint`` names the command that builds it."""

    def __init__(self, message: str, hint: Optional[str] = None) -> None:
        super().__init__(message if not hint else f"{message} (hint: {hint})")
        self.hint = hint
