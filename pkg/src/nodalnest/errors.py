"""Exception hierarchy shared across the toolkit."""


class NodalNestError(Exception):
    """Base class for all toolkit errors."""


class InputError(NodalNestError):
    """Invalid user input: bad expression, zero polynomial where nonzero is
    required, malformed flags, out-of-range arguments."""


class ParseError(InputError):
    """Syntax error in a polynomial expression, with position information."""

    def __init__(self, message: str, line: int, column: int, token: str = ""):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
        self.token = token


class GenericityError(InputError):
    """The input polynomial is not in generic position for the requested
    operation.  The message says what failed and that a rotation fixes it."""


class CertificationError(NodalNestError):
    """An internal certificate that must hold by construction failed.
    Indicates a bug, not bad input; the CLI maps this to exit code 3."""
