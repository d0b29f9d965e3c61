"""Exception hierarchy shared by every module."""


class LiftkitError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""


class InversionOfNonUnit(LiftkitError, ZeroDivisionError):
    pass


class ZeroInput(LiftkitError, ValueError):
    pass


class IndexOutOfRange(LiftkitError, ValueError):
    pass


class MissingParameter(LiftkitError, KeyError):
    pass


class ZeroForInvertible(LiftkitError, ValueError):
    pass


class NotFiniteOrder(LiftkitError, ValueError):
    pass


class OrbitNotFinite(LiftkitError, RuntimeError):
    pass


class EmptyWord(LiftkitError, ValueError):
    pass


class TooShort(LiftkitError, ValueError):
    pass


class NotLyndonInput(LiftkitError, ValueError):
    pass


class NotLyndon(LiftkitError, ValueError):
    pass


class NotLyndonInBrackets(NotLyndon):
    pass


class NotShirshovClosed(LiftkitError, ValueError):
    pass


class NotHomogeneous(LiftkitError, ValueError):
    pass


class ReductionDiverged(LiftkitError, RuntimeError):
    pass


class NotPrecL(LiftkitError, ValueError):
    pass


class NotCharacterHomogeneous(LiftkitError, ValueError):
    pass


class InfiniteDimension(LiftkitError, ValueError):
    pass


class DegreeBoundTooSmall(LiftkitError, RuntimeError):
    pass


class UnknownCase(LiftkitError, KeyError):
    pass


class CasePredicateViolated(LiftkitError, ValueError):
    pass


class InvalidRealization(LiftkitError, ValueError):
    pass


class VerificationFailed(LiftkitError, AssertionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ExpressionSyntaxError(LiftkitError, ValueError):
    """Grammar error; ``position`` is the 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
