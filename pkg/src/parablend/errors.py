"""Exception types shared across the kernel."""

__all__ = [
    "GeometryError",
    "DegenerateChord",
    "IllConditionedTriple",
    "InsufficientPoints",
    "ParameterOutOfRange",
    "NetTooNarrow",
    "FormatError",
    "ParseError",
    "DimensionMismatch",
]


class GeometryError(Exception):
    """Base class for geometric construction and evaluation failures."""


class DegenerateChord(GeometryError):
    """Two points that must be distinct coincide."""


class IllConditionedTriple(GeometryError):
    """The middle point of a triple projects onto or beyond an end of the
    outer chord, so no usable parabola passes through the three points."""


class InsufficientPoints(GeometryError):
    """Fewer input points than the construction needs."""


class ParameterOutOfRange(GeometryError):
    """Evaluation parameter outside the domain; callers must not rely on
    clamping."""


class NetTooNarrow(GeometryError):
    """A net direction has fewer than two lines of points."""


class FormatError(Exception):
    """Base class for interchange file violations."""


class ParseError(FormatError):
    """Malformed file content.

    `line` is the 1-based line number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionMismatch(FormatError):
    """Declared net dimensions disagree with the number of points supplied."""
