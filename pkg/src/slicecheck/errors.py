"""Exception hierarchy shared by all slicecheck modules."""


class SliceCheckError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SliceCheckError, ValueError):
    """A parameter lies outside the range an operation accepts."""


class ZeroDenominator(SliceCheckError, ZeroDivisionError):
    """A continued fraction tail evaluated to 0 where a division was required."""


class ZeroInput(SliceCheckError, ValueError):
    pass


class ZeroAlpha(SliceCheckError, ZeroDivisionError):
    pass


class NotBlowdownable(SliceCheckError, ValueError):
    pass


class NotAbsorbable(SliceCheckError, ValueError):
    pass


class NotNegativeDefinite(SliceCheckError, ValueError):
    pass


class DimensionMismatch(SliceCheckError, ValueError):
    pass


class IntegralityViolation(SliceCheckError, ArithmeticError):
    pass
