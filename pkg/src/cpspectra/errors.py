"""Exception types shared across the package."""


class CpSpectraError(Exception):
    """Base class for all package-specific errors."""


class PoleProximityError(CpSpectraError):
    """An evaluation point landed too close to a pole of the dielectric
    response or of the reflection coefficient."""


class NoSurfaceResonanceError(CpSpectraError):
    """The material has no surface mode (oscillator switched off)."""


class QuadratureError(CpSpectraError):
    """An integral did not converge within the allowed subdivisions.

    Carries the best estimate reached and the achieved error so callers
    can decide whether to use the degraded value.
    """

    def __init__(self, message, best_estimate=None, error=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error = error


class SeriesConvergenceError(CpSpectraError):
    """Precondition of the multiple-reflection series is violated
    (|r+ r-| >= 1 at the evaluation frequency)."""


class ComputationError(CpSpectraError):
    """A computed observable violated a physical sanity bound, which
    indicates a quadrature failure rather than valid physics."""
