"""Exception hierarchy shared by all sccc modules."""


class ScccError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(ScccError):
    """Operands belong to different finite fields."""


class DivisionByZero(ScccError):
    """Division or inversion of the zero field element."""


class NotADivisor(ScccError):
    """Requested root-of-unity order does not divide q - 1."""


class BothZero(ScccError):
    """gcd of two zero polynomials is undefined."""


class SizeError(ScccError):
    """Matrix dimensions incompatible with the requested operation."""


class RankDeficient(ScccError):
    """Matrix does not have full row rank."""


class ContextMismatch(ScccError):
    """Operands live in different skew polynomial rings."""


class NoRootOfUnity(ScccError):
    """The ring context has no primitive n-th root of unity (n does not divide q - 1)."""


class NotCyclicSigma(ScccError):
    """Operation requires the standard full-cycle idempotent permutation."""


class InvalidParameters(ScccError):
    """Bad parameters for an elementary unit."""


class NotBasic(ScccError):
    """Matrix rows do not form a basic matrix (maximal minors not coprime)."""


class NotDelayFree(ScccError):
    """Generator or matrix is not delay-free."""


class NotSemiReduced(ScccError):
    """Generator is not semi-reduced."""


class InvalidSpec(ScccError):
    """Degree specification violates its invariants."""


class Infeasible(ScccError):
    """Exhaustive search proved the rook instance unsolvable."""


class ConstructiveCaseUnavailable(ScccError):
    """No proved constructive case applies to this rook instance."""


class RookInfeasible(ScccError):
    """Code construction hit an unsolvable rook instance."""


class CycleLengthMismatch(ScccError):
    """Per-cycle generator size does not match the cycle length."""


class StateSpaceTooLarge(ScccError):
    """Trellis state space exceeds the configured limit."""


class NotMinimal(ScccError):
    """Encoder is not minimal."""
