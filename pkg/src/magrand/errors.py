"""Exception types shared across the package."""


class MagError(ValueError):
    """Base class for all errors raised by magrand."""


class InvalidVertexError(MagError):
    pass


class SelfLoopError(MagError):
    """Raised when a query or edge would pair a composite vertex with itself."""


class OutOfRangeError(MagError):
    pass


class InvalidAspectError(MagError):
    pass


class ConfigError(MagError):
    pass


class HypothesisViolation(MagError):
    """A query does not satisfy the noncontiguity hypothesis j > i + 2."""


class NoWitnessError(MagError):
    """No direct edge and no common neighbor: the graph has diameter > 2 for this pair."""


class FormatError(MagError):
    """Malformed ``.magc`` input. ``position`` is a byte offset into the input."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at byte {position})"
        super().__init__(message)
