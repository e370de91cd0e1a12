"""Exception types shared across the package."""


class SecurityBidsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SecurityBidsError):
    """An argument lies outside its documented domain."""


class InputError(SecurityBidsError):
    """Malformed input, e.g. an unsorted grid or a non-monotone map."""


class ParameterError(SecurityBidsError):
    """A configuration parameter outside its admissible range."""


class ValidationError(SecurityBidsError):
    """Loaded or constructed data failed a consistency check."""


class AssumptionViolation(SecurityBidsError):
    """A model or auction instance fails a structural condition that the
    downstream computation relies on (bracketing, participation, ...)."""


class PreconditionError(SecurityBidsError):
    """A stated precondition of an operation is not met.

    ``gap`` carries the measured violation when one is available.
    """

    def __init__(self, message, gap=None):
        super().__init__(message)
        self.gap = gap


class NumericalError(SecurityBidsError):
    """A numerical routine could not reach its target accuracy.

    The best available estimate is attached so callers can still inspect it.
    """

    def __init__(self, message, best_estimate=None, error_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate
