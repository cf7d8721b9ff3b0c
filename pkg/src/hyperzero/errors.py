"""Exception types raised by the engine."""


class HyperzeroError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(HyperzeroError, ZeroDivisionError):
    pass


class InvalidClass(HyperzeroError, ValueError):
    pass


class DivisionByZeroPoly(HyperzeroError, ZeroDivisionError):
    pass


class RealityViolation(HyperzeroError, ArithmeticError):
    """The normal polynomial came out with a non-negligible imaginary part."""


class RadiusViolation(HyperzeroError, ValueError):
    pass


class DegreeZero(HyperzeroError, ValueError):
    pass


class ConstantPolynomial(HyperzeroError, ValueError):
    """Zero-set queries need a polynomial of degree at least one."""


class ClassificationMismatch(HyperzeroError, ArithmeticError):
    """A class of V(N(f)) classified as empty, which cannot happen exactly."""


class FtaViolation(HyperzeroError, ArithmeticError):
    pass


class NoZeroFound(HyperzeroError, ArithmeticError):
    pass


class DegenerateDenominator(HyperzeroError, ArithmeticError):
    pass


class ParseError(HyperzeroError, ValueError):
    """Syntax error in an octonion or polynomial expression."""

    def __init__(self, message, text="", position=0, expected=()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(f"{detail} at position {position}")

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"
