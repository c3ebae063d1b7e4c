"""Exception types raised across the package.

The CLI maps :class:`ValidationError` subclasses to exit code 1 and
:class:`NumericalFailure` to exit code 2.
"""


class ArtifactError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ArtifactError, ValueError):
    """Input does not satisfy an operation's preconditions."""


class OutOfDomainError(ValidationError):
    pass


class InvalidNodesError(ValidationError):
    pass


class InvalidModelError(ValidationError):
    pass


class DegenerateSightlinesError(ValidationError):
    """Lines of sight are parallel or diverge, so no island can be located."""


class TableFormatError(ValidationError):
    """A qi table file could not be parsed.

    ``row`` is the 1-based data row number (header excluded) when the problem
    can be attributed to a single row, otherwise ``None``.
    """

    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class NumericalFailure(ArtifactError, ArithmeticError):
    """An iterative solver did not converge or a system was singular."""
