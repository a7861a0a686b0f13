"""Exception types raised by the library."""


class C3Error(ValueError):
    """Base class for domain errors in this package."""


class NotInvertible(C3Error):
    pass


class SpeedNotSubluminal(C3Error):
    pass


class NonUnitDirection(C3Error):
    pass


# Rotations take an axis rather than a direction; same failure mode.
NonUnitAxis = NonUnitDirection


class InvalidFrame(C3Error):
    pass


class NotAField(C3Error):
    pass


class EvaluationFailure(C3Error):
    pass


class SuperluminalSample(C3Error):
    pass


class UnknownKind(C3Error):
    pass
