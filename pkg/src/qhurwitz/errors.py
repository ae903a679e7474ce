"""Shared exception types."""


class QHurwitzError(Exception):
    """Base class for all package errors."""


class ScalarDivisionError(QHurwitzError, ZeroDivisionError):
    """Division of a Scalar by zero."""


class EvaluationPoleError(QHurwitzError, ArithmeticError):
    """A denominator vanished at the requested evaluation point."""


class ContextMismatchError(QHurwitzError, ValueError):
    """Operands were built over different parameter sets.

    Parameter sets are fixed at construction; mixing them is an error,
    never a coercion.
    """


class OrderMismatchError(QHurwitzError, ValueError):
    """Truncated series of different orders were combined."""


class BoundExceededError(QHurwitzError, ValueError):
    """A size argument exceeded the configured enumeration bound."""


class WeightMismatchError(QHurwitzError, ValueError):
    """Partitions of different weights where equal weights are required."""


class ParseError(QHurwitzError, ValueError):
    """A serialized value could not be parsed."""
