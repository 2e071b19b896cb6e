"""Exception hierarchy shared by every module."""


class MinkpackError(Exception):
    """Base class for all errors raised by minkpack."""


class DomainError(MinkpackError, ValueError):
    """An argument is outside the domain of the operation."""


class NoBracket(MinkpackError, ValueError):
    """The root-finding interval does not bracket a sign change."""


class NoConvergence(MinkpackError, ArithmeticError):
    """An iterative method exhausted its budget."""


class Degenerate(MinkpackError, ValueError):
    """A lattice basis is linearly dependent."""


class BudgetExceeded(MinkpackError, RuntimeError):
    """An enumeration would exceed its configured size cap."""


class InconsistentInput(MinkpackError, ValueError):
    """Inputs are individually valid but jointly contradictory."""


class TangentDegenerate(MinkpackError, ArithmeticError):
    """Adjacent tangent lines are parallel."""


class NotSmooth(DomainError):
    """The boundary curve has corners at this exponent."""


class IntegerOverflow(MinkpackError, OverflowError):
    """An exact integer computation exceeds the supported width."""
