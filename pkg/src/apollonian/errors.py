"""Exception hierarchy shared by every module of the package."""


class ApollonianError(ValueError):
    """Base class for all domain errors raised by :mod:`apollonian`."""


class NegativeRadicandError(ApollonianError):
    def __init__(self, radicand):
        super().__init__(f"tricycle has no real tangent completion (radicand {radicand} < 0)")
        self.radicand = radicand


class NonIntegralError(ApollonianError):
    """The fourth curvature is irrational; ``radicand`` is the exact non-square."""

    def __init__(self, radicand):
        super().__init__(f"radicand {radicand} is not a perfect square")
        self.radicand = radicand


class NotCoprimeError(ApollonianError):
    pass


class NotEvertedError(ApollonianError):
    pass


class NonIntegralMuError(ApollonianError):
    pass


class DegenerateLatticeError(ApollonianError):
    pass


class InvalidSpinorError(ApollonianError):
    pass


class InvalidTricycleError(ApollonianError):
    pass


class NotTangentError(ApollonianError):
    pass


class PoleProjectionError(ApollonianError):
    pass


class ZeroKError(ApollonianError):
    pass


class PoleImageError(ApollonianError):
    pass


class BothZeroError(ApollonianError):
    pass


class InvalidQuadrupleError(ApollonianError):
    pass
