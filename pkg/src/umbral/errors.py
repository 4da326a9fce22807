"""Exception hierarchy shared by every module of the package."""


class UmbralError(Exception):
    """Base class for all errors raised by :mod:`umbral`."""


class ZeroConstantTerm(UmbralError, ZeroDivisionError):
    pass


class NonzeroInnerConstant(UmbralError, ValueError):
    pass


class BadConstantTerm(UmbralError, ValueError):
    pass


class ZeroLinearCoefficient(UmbralError, ValueError):
    pass


class OrderExceeded(UmbralError, IndexError):
    pass


class IndexOutOfRange(UmbralError, IndexError):
    pass


class UnknownName(UmbralError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class NonInvertible(UmbralError, ValueError):
    """The umbra has zero first moment, so no compositional inverse exists."""


class NonInvertibleGamma(NonInvertible):
    pass


class PreconditionFailed(UmbralError, ValueError):
    pass


class NonIntegerCount(UmbralError, ArithmeticError):
    """A path count came out non-integral; signals an internal inconsistency."""


class RouteMismatch(UmbralError, AssertionError):
    """Two independent computation routes disagreed."""


class TooLarge(UmbralError, ValueError):
    pass


class DslSyntaxError(UmbralError, SyntaxError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
