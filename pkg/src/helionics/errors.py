"""Exception types raised across the package."""


class HelionicsError(Exception):
    pass


class NonConvergence(HelionicsError):
    pass


class NoSignChange(HelionicsError):
    pass


class DegenerateTriplet(HelionicsError):
    pass


class NonPositiveExponent(HelionicsError):
    pass


class NoBoundState(HelionicsError):
    pass


class NotUnityNormalized(HelionicsError):
    pass


class MarginalMismatch(HelionicsError):
    pass


class NormalizationError(HelionicsError):
    """Raised when converting a density that is already unity-normalized."""


class MissingColumn(HelionicsError):
    pass
