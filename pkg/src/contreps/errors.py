"""Exception hierarchy.

Every error raised on purpose derives from :class:`ContrepsError`.  Parse
failures are kept apart from domain failures so the CLI can map them to
different exit codes.
"""


class ContrepsError(Exception):
    pass


class ParseError(ContrepsError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class DomainError(ContrepsError):
    """Input is well formed but outside what the algorithm can handle."""


class RingMismatch(DomainError, TypeError):
    pass


class UnsupportedRing(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class NotAUnit(DomainError):
    pass


class NoncommutativeRing(DomainError):
    pass


class LengthLimitExceeded(DomainError):
    pass


class NotQuasiPalindromic(DomainError):
    pass


class BothZero(DomainError):
    pass


class PreconditionFailed(DomainError):
    pass


class NoSolution(DomainError):
    pass


class NotRepresentable(DomainError):
    pass


class UnitNotSumOfSquares(NotRepresentable):
    pass


class NotCoprime(DomainError):
    pass


class NotADivisor(DomainError):
    pass


class BadField(DomainError):
    pass


class DegreeError(DomainError):
    pass


class NoMultiplier(DomainError):
    pass


class InvariantViolation(ContrepsError, AssertionError):
    """An internal invariant failed.  These should never fire."""


class PalindromeViolation(InvariantViolation):
    pass


class ReconstructionMismatch(InvariantViolation):
    pass


class ChainStall(DomainError):
    pass


class NonTermination(DomainError):
    pass
