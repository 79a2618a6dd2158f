"""Exception types shared across the package."""


class KBSkeinError(Exception):
    pass


class NonExactDivision(KBSkeinError, ArithmeticError):
    """Raised when a Laurent polynomial quotient has a nonzero remainder."""


class DivisionByZero(KBSkeinError, ZeroDivisionError):
    pass


class IndexOutOfRange(KBSkeinError, IndexError):
    pass


class UnsupportedCurve(KBSkeinError, ValueError):
    """A boundary curve (a, b)_T with a >= 2 has no known peripheral image."""


class NotPolynomial(KBSkeinError, ValueError):
    pass


class ZeroLeadingCoefficient(KBSkeinError, ArithmeticError):
    pass


class SizeLimit(KBSkeinError, ValueError):
    pass


class UnknownSuite(KBSkeinError, KeyError):
    pass
