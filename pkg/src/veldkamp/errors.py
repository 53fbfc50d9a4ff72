"""Exception types raised across the package."""

from __future__ import annotations


class VeldkampError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(VeldkampError, ValueError):
    pass


class EdgeListParseError(VeldkampError, ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based (0 for whole-file errors)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


class CapacityError(VeldkampError):
    """Raised when a structure is too large for exhaustive enumeration."""

    def __init__(self, point_count: int, cap: int):
        self.point_count = point_count
        self.cap = cap
        super().__init__(
            f"{point_count} points exceeds the enumeration cap of {cap} "
            f"(raise max_points / --max-points to override)"
        )


class NotAHyperplaneError(VeldkampError, LookupError):
    pass


class PauliParseError(VeldkampError, ValueError):
    pass


class WidthMismatchError(VeldkampError, ValueError):
    pass


class ContextError(VeldkampError, ValueError):
    """A magic-square context that fails to commute or to close to +-identity."""

    def __init__(self, context: str, reason: str):
        self.context = context
        super().__init__(f"{context}: {reason}")


class LabelingError(VeldkampError, ValueError):
    pass


class StructuralError(VeldkampError):
    """A geometric configuration does not have the expected shape."""
