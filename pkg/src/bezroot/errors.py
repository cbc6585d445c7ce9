"""Exception classes raised by bezroot."""


class BezrootError(ValueError):
    """Base class for every error raised on bad input."""


class DivisionByZeroPoly(BezrootError, ZeroDivisionError):
    pass


class ZeroPolynomial(BezrootError):
    pass


class BadOrder(BezrootError):
    pass


class BadExponents(BezrootError):
    pass


class NotSymmetric(BezrootError):
    pass


class NotSquare(BezrootError):
    pass


class DegreeTooSmall(BezrootError):
    pass


class DegenerateFamily(BezrootError):
    pass


class NotSeparable(BezrootError):
    pass


class DegreeOrder(BezrootError):
    pass


class IdenticallyZero(BezrootError):
    pass


class ThresholdViolation(BezrootError):
    pass


class BadSign(BezrootError):
    pass


class ZeroXi(BezrootError):
    pass


class NotTotallyComplex(BezrootError):
    pass


class BadParity(BezrootError):
    pass


class BadLeadingSign(BezrootError):
    pass


class OutOfRange(BezrootError):
    pass


class ParseError(BezrootError):
    """Malformed rational, polynomial or matrix text."""
