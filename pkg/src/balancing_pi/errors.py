"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceViolation(DomainError):
    """The summation argument does not exceed the convergence threshold."""


class NoValidRoot(Exception):
    """No root of the argument equation yields a convergent series."""


class IntegrityError(AssertionError):
    """An identity that must hold exactly (or to working precision) failed."""


class DegenerateIndexWarning(UserWarning):
    """An index makes one side of an identity undefined (e.g. F_0 = 0)."""
