"""Exception types raised by the package."""


class NonIntegralQuotient(ArithmeticError):
    """A series division step needed a non-exact integer division."""


class ZeroDivisor(ZeroDivisionError):
    """Division by a series that is identically zero below its order."""


class NonIntegralExponent(ArithmeticError):
    """Divisor-sum inversion produced a non-integer exponent."""


class InputTooLarge(ValueError):
    """Requested size exceeds the bound of an exponential-cost routine."""


class ParamsOutOfRange(ValueError):
    """Theta/congruence parameters violate the hypotheses of an identity."""


class KOutOfRange(ParamsOutOfRange):
    """Polygonal index k outside the range an identity holds for."""
