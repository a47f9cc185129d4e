"""Exception hierarchy shared by every layer of the package."""


class AMMError(Exception):
    """Base class for all errors raised by ammroot."""


class InvalidInput(AMMError, ValueError):
    """Caller supplied arguments outside an operation's domain."""


class ModulusTooSmall(InvalidInput):
    pass


class BothZero(InvalidInput):
    pass


class NotInvertible(InvalidInput):
    pass


class EvenModulus(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class EvenCharacteristic(InvalidInput):
    pass


class CharTooSmall(InvalidInput):
    pass


class NotMonic(InvalidInput):
    pass


class NotIrreducible(InvalidInput):
    pass


class BadCoefficients(InvalidInput):
    """Coefficient vector has the wrong length or an entry outside [0, p)."""


class CtxMismatch(InvalidInput):
    pass


class ZeroInverse(InvalidInput, ZeroDivisionError):
    pass


class ZeroElement(InvalidInput):
    pass


class RDoesNotDivide(InvalidInput):
    pass


class RNotPrime(InvalidInput):
    pass


class UnsupportedExponent(InvalidInput):
    pass


class FieldTooLarge(InvalidInput):
    pass


class NotAResidue(AMMError, ValueError):
    """The element has no r-th root in the field."""


class NotInSubgroup(AMMError):
    """A discrete logarithm was requested for an element outside <a>."""


class TrialBudgetExceeded(AMMError, RuntimeError):
    """A randomized search ran out of candidates."""


class InternalVerificationFailed(AMMError, ArithmeticError):
    """A computed result failed its own correctness check.

    Usually means a caller contract was broken upstream, e.g. a composite
    characteristic or a reducible modulus slipped past validation.
    """
