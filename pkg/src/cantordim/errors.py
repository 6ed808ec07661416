"""Exception hierarchy shared by all modules."""


class CantorDimError(Exception):
    """Base class for all library errors."""


class DomainError(CantorDimError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class OpDomainError(DomainError):
    """A dimension operator was applied to operands outside its validity domain.

    Attributes:
        op:        operator tag ("add", "sub", "mul", "div", "pow").
        operands:  the offending (d_a, d_b) pair (d_b is the exponent for "pow").
        condition: short machine-readable tag for the violated condition.
    """

    def __init__(self, op, operands, condition, message):
        super().__init__(message)
        self.op = op
        self.operands = operands
        self.condition = condition


class CapExceeded(CantorDimError):
    """A construction would produce more intervals than the configured cap."""


class FitDegenerate(CantorDimError):
    """All box counts are equal; the log-log slope is undetermined."""


class ParseError(CantorDimError, ValueError):
    """An interval document could not be parsed."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{message} ({location})")
        self.location = location


class InvariantError(CantorDimError, ValueError):
    """Parsed data violates the interval-set invariants."""
