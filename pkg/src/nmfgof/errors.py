"""Exception hierarchy shared across the toolkit.

The CLI maps these onto distinct exit codes, so raise the most specific
class that applies.
"""


class ShapeError(ValueError):
    """Matrix dimensions are inconsistent with the requested operation."""


class BoundsError(IndexError):
    """An index or interval lies outside the valid range."""


class DomainError(ValueError):
    """A value violates a mathematical precondition (negative rate, empty sample, ...)."""


class DegenerateInputError(DomainError):
    """Input matrix is all-zero; the factorization objective is undefined."""


class DegenerateRatesError(DomainError):
    """Bootstrap rates are so small that replicates are all-zero even after resampling."""


class NumericalError(ArithmeticError):
    """A computation produced a non-finite intermediate result."""


class IngestionError(ValueError):
    """Raw corpus input could not be turned into a grouped document-term matrix."""
