"""Exception hierarchy.

Every error raised by the package derives from QVerifyError, and most also
derive from the closest builtin so callers can catch either.
"""


class QVerifyError(Exception):
    """Base class for all package errors."""


class ZeroDivisor(QVerifyError, ZeroDivisionError):
    pass


class DivisionByZero(QVerifyError, ZeroDivisionError):
    pass


class ZeroBase(QVerifyError, ZeroDivisionError):
    pass


class NotOrdinary(QVerifyError, ValueError):
    """A polynomial with negative exponents where an ordinary one is needed."""


class BothZero(QVerifyError, ValueError):
    pass


class InvalidIndex(QVerifyError, ValueError):
    pass


class ParseError(QVerifyError, ValueError):
    pass


class NotInvertible(QVerifyError, ArithmeticError):
    """The element shares a factor with the cyclotomic modulus."""


class ModulusMismatch(QVerifyError, ValueError):
    pass


class SingularFactor(QVerifyError, ZeroDivisionError):
    """A Pochhammer factor in a denominator vanishes identically."""


class SingularLowerParameter(SingularFactor):
    pass


class UndefinedShift(QVerifyError, KeyError):
    pass


class UnknownId(QVerifyError, KeyError):
    pass


class ParamMissing(QVerifyError, ValueError):
    pass


class SingularSample(QVerifyError, ValueError):
    pass


class ParamOutOfRange(QVerifyError, ValueError):
    pass


class BoundViolation(QVerifyError, ValueError):
    pass


class NotCoprime(QVerifyError, ArithmeticError):
    pass
