"""Exception types shared across the package."""


class SineSeriesError(Exception):
    """Base class for all library errors."""


class DomainError(SineSeriesError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(SineSeriesError, ArithmeticError):
    """Evaluation was requested exactly at a pole.

    ``location`` carries the pole position, ``factor`` names the offending
    factor when the function is a product.
    """

    def __init__(self, message, location=None, factor=None):
        super().__init__(message)
        self.location = location
        self.factor = factor


class BudgetExceededError(SineSeriesError, RuntimeError):
    """A certified tolerance is unreachable within the configured budget.

    ``achieved_bound`` is the best certified error bound the operation could
    offer before giving up; it may be ``None`` when no partial result exists.
    """

    def __init__(self, message, achieved_bound=None):
        super().__init__(message)
        self.achieved_bound = achieved_bound


class ResolutionError(SineSeriesError, ValueError):
    """A sampling step is too coarse to resolve the fastest oscillation."""


class NumericalInstabilityError(SineSeriesError, ArithmeticError):
    """A numerical derivative or extrapolation failed its stability check."""
