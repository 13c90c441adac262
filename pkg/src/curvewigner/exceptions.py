"""Exception types raised across the package."""


class CurveWignerError(Exception):
    """Base class for all package errors."""


class ReduciblePolynomialError(CurveWignerError, ValueError):
    pass


class DegreeMismatchError(CurveWignerError, ValueError):
    pass


class InverseOfZeroError(CurveWignerError, ZeroDivisionError):
    pass


class NoSelfDualBasisFound(CurveWignerError, RuntimeError):
    """Internal failure: every binary field has a self-dual basis."""


class NoCommutingPartition(CurveWignerError, RuntimeError):
    pass


class NotABundleError(CurveWignerError, ValueError):
    pass


class InconsistentRecurrence(CurveWignerError, ValueError):
    """The curve function violates the abelian condition."""


class UnknownLabel(CurveWignerError, KeyError):
    pass


class DimensionMismatch(CurveWignerError, ValueError):
    pass


class UnknownFigure(CurveWignerError, ValueError):
    pass


class PresetError(CurveWignerError, ValueError):
    pass
