"""Errors - exception hierarchy shared by the library and the CLI."""


class WaringError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WaringError, ValueError):
    """The request has no mathematical meaning (constant monomial, 1/0, bad embedding)."""


class PreconditionError(WaringError, ValueError):
    """An operation was called outside its documented input range."""


class ParseError(PreconditionError):
    """Text input (monomial, linear form, decomposition JSON) could not be read."""


class SingularSystemError(WaringError, ArithmeticError):
    """A linear system that must be invertible turned out singular. Indicates a bug."""
