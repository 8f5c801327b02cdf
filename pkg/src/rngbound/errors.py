"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Requested index space or enumeration exceeds the desk-scale guard."""


class FormatError(ValueError):
    """Malformed .code or .pmf input text.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RankError(ValueError):
    """Generator matrix rows are linearly dependent over F_p."""
