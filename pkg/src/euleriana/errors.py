"""Exception types shared across the library."""


class EulerianaError(Exception):
    """Base class for all library errors."""


class NonConvergence(EulerianaError):
    """Root iteration failed to reach the requested residual."""


class ToleranceNotReached(EulerianaError):
    """Quadrature hit its subdivision/level cap; carries the best value found."""

    def __init__(self, message, value=None, error_estimate=None, evaluations=0):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class DivergentIntegral(EulerianaError):
    """Tail truncation estimates of a semi-infinite integral fail to shrink."""


class PoleAt(EulerianaError):
    """Function evaluated at a pole."""

    def __init__(self, z):
        super().__init__(f"pole at {z}")
        self.location = z


class DomainError(EulerianaError):
    """Argument outside the supported domain."""


class NotConvergent(EulerianaError):
    """Series does not converge for the requested argument."""


class NoConvergenceSignal(EulerianaError):
    """Transformed terms failed to decrease; no value is assigned."""


class DegenerateKernel(EulerianaError):
    """Recurrence has constant coefficients; the integral ansatz does not apply."""


class InsufficientBoundaries(EulerianaError):
    """Fewer than two admissible boundary candidates exist."""

    def __init__(self, message, candidates=None):
        super().__init__(message)
        self.candidates = candidates or []


class NoCompatibleRepresentation(EulerianaError):
    """No boundary pair is compatible with the initial conditions."""


class UnknownSuite(EulerianaError):
    """Requested verification suite does not exist."""
