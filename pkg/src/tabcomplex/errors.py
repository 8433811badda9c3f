"""Exception hierarchy shared by all modules."""


class TableauComplexError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(TableauComplexError, ValueError):
    """Input data violates a documented precondition."""


class CapExceeded(TableauComplexError, RuntimeError):
    """An enumeration would exceed its configured size limit."""


class SearchBudgetExceeded(CapExceeded):
    """A combinatorial search gave up before reaching a verdict."""


class InvariantViolation(TableauComplexError, RuntimeError):
    """An internal consistency check failed.

    Raised when the data cannot come from a tableau complex (for instance a
    ridge lying in three facets) or when a pivot that must be safe is not.
    """


class MethodDisagreement(TableauComplexError, RuntimeError):
    """Two independent formulas produced different results."""
