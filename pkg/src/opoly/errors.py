"""Exception hierarchy shared by every module."""


class OpolyError(Exception):
    """Base class for all library errors."""


class DegenerateParameters(OpolyError):
    """A denominator factor vanishes for the requested parameters."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class ConditionViolated(DegenerateParameters):
    """Parameters break the admissibility conditions of the Sobolev product."""


class ExactDivisionFailed(OpolyError):
    pass


class ZeroLatticeStep(OpolyError):
    pass


class OutOfSupport(OpolyError):
    pass


class NoCounterpart(OpolyError):
    pass


class PoleHit(OpolyError):
    pass


class ContourInvalid(OpolyError):
    pass


class TailTooFat(OpolyError):
    pass


class NumericBreakdown(OpolyError):
    pass


class SeriesDiverges(OpolyError):
    pass


class NonConvergence(OpolyError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
