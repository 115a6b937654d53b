"""Exception taxonomy shared across the package."""


class LogLambertError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LogLambertError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class SingularityError(LogLambertError, ArithmeticError):
    """Evaluation requested exactly at (or too close to) a singular point."""


class ConvergenceError(LogLambertError, RuntimeError):
    """An iteration exhausted its budget without meeting its tolerance."""


class NoSolutionError(LogLambertError):
    """A root the parameter regime promises does not exist numerically."""


class UnsupportedCaseError(LogLambertError):
    """The parameter signs/magnitudes fall outside the catalogued cases."""


class BracketError(LogLambertError, ValueError):
    """The supplied interval does not straddle the requested value."""


class PrecisionError(LogLambertError):
    """The computation is too ill-conditioned to meet its accuracy contract."""


class IntegrationError(LogLambertError):
    """A quadrature tail or tolerance criterion could not be satisfied."""
