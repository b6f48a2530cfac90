"""Exception hierarchy shared by every module of the package."""


class SdCyclicError(Exception):
    """Base class for all package errors."""


class ReducibleModulus(SdCyclicError, ValueError):
    pass


class DegreeMismatch(SdCyclicError, ValueError):
    pass


class SpecMismatch(SdCyclicError, ValueError):
    """Operands belong to different fields."""


class DivisionByZero(SdCyclicError, ZeroDivisionError):
    pass


class LengthMismatch(SdCyclicError, ValueError):
    pass


class ModulusMismatch(SdCyclicError, ValueError):
    """Truncated polynomials with different (x+1)-adic moduli were combined."""


class InconsistentSystem(SdCyclicError, ArithmeticError):
    """A linear system that must be solvable was not.

    Raised by the recursive solver; seeing it means a bug, not bad input.
    """


class MissingAssignment(SdCyclicError, KeyError):
    pass


class SizeOverflow(SdCyclicError, OverflowError):
    pass


class UnsupportedFamily(SdCyclicError, ValueError):
    pass


class CapExceeded(SdCyclicError, OverflowError):
    pass


class CardinalityMismatch(SdCyclicError, AssertionError):
    """An expanded code does not have the size its family predicts."""
