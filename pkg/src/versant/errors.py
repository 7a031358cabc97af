"""Exception hierarchy shared by all versant modules."""


class VersantError(Exception):
    """Base class for all errors raised by this package."""


class EncodingError(VersantError):
    """Input bytes are not valid UTF-8."""


class ParseError(VersantError):
    """A line or record could not be parsed.

    Carries the 1-based line (or record) number when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class StructureError(VersantError):
    """Parsed input violates a structural constraint (duplicate or out-of-order refs)."""


class NotFoundError(VersantError):
    """A requested chapter or translation does not exist."""


class DomainError(VersantError):
    """An argument is outside its documented domain."""


class ValidationError(VersantError):
    """Cross-record or cross-translation consistency check failed."""
