"""Exception types shared across the package."""


class QuadMdsError(Exception):
    """Base class for all package errors."""


class DomainError(QuadMdsError, ValueError):
    """Input outside an operation's domain."""


class OracleBoundError(QuadMdsError):
    """A brute-force oracle refused an input above its configured bound."""


class PoleError(QuadMdsError, ArithmeticError):
    """Evaluation requested exactly at a pole.

    Carries the residue when it is known (``residue`` attribute).
    """

    def __init__(self, message, residue=None):
        super().__init__(message)
        self.residue = residue


class PoleProximityError(QuadMdsError, ArithmeticError):
    """Evaluation requested too close to a pole for reliable results."""


class ConditioningError(QuadMdsError, ArithmeticError):
    """A completion factor was requested too close to a pole or zero."""


class PreconditionError(QuadMdsError):
    """A series evaluation was requested outside its convergence region."""


class InconsistencyError(QuadMdsError):
    """An internal cross-check failed; indicates a bug, not a data condition."""


class MemoryBudgetError(QuadMdsError):
    """A table generation would exceed the configured memory budget."""
