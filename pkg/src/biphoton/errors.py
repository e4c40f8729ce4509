"""Exception hierarchy for the biphoton simulator."""


class BiphotonError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(BiphotonError):
    """Invalid or non-finite input parameters."""


class ThresholdError(BiphotonError):
    """Parametric-oscillation threshold reached: the boundary-value
    scattering coefficients diverge and the below-threshold model breaks
    down."""


class ConvergenceError(BiphotonError):
    """Adaptive quadrature failed to reach the requested tolerance."""
