"""Domain errors.  The CLI maps every subclass of ``DomainError`` to exit code 2
and prints the class name."""


class DomainError(Exception):
    """Base class for errors raised by a well-formed request the mathematics rejects."""


class MismatchedContext(DomainError, ValueError):
    pass


class NotDivisible(DomainError, ArithmeticError):
    pass


class Undefined(DomainError, ArithmeticError):
    pass


class SearchBudgetExceeded(DomainError, RuntimeError):
    pass


class NotACode(DomainError, ValueError):
    pass


class NotInDomain(DomainError, ValueError):
    pass


class NotInBaseGroup(DomainError, ValueError):
    pass


class IdentityElement(DomainError, ValueError):
    pass


class BadParameter(DomainError, ValueError):
    pass


class NotInLevel(DomainError, ValueError):
    pass


class NotInCommutant(DomainError, ValueError):
    pass


class NotABasis(DomainError, ValueError):
    pass


class BaseMismatch(DomainError, ValueError):
    pass


class RadiusTooLarge(DomainError, ValueError):
    pass


class ParseError(DomainError, ValueError):
    pass
