"""Exception hierarchy shared by the library and the CLI."""


class BandcubeError(Exception):
    """Base class for every error raised by this package."""

    kind = "error"


class ValidationError(BandcubeError, ValueError):
    """Input violates a structural precondition."""

    kind = "validation"


class ParseError(ValidationError):
    """A text document could not be parsed."""

    kind = "parse"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RangeError(ValidationError):
    """A vertex id or point lies outside its allowed range."""

    kind = "range"


class SizeCapError(BandcubeError):
    """An exhaustive routine was asked to run above its size cap."""

    kind = "size"
