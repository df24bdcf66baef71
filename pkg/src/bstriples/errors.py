"""Exception hierarchy. Every domain failure derives from ``DomainError``."""


class DomainError(ValueError):
    pass


class NotPythagorean(DomainError):
    pass


class ZeroLeg(DomainError):
    """Raised when an operation needs ``a != 0``."""


class ZeroHypotenuse(DomainError):
    pass


class ZeroTriple(DomainError):
    pass


class OutOfRegime(DomainError):
    pass


class DegenerateParameter(DomainError):
    """Raised for parameters the swap involution cannot reach (r = +-1, beta = 0)."""


class DegenerateInvolution(DomainError):
    pass


class PreconditionViolated(DomainError):
    pass


class MixedDiscriminant(DomainError):
    pass


class NoSolution(DomainError):
    pass


class InvalidDifference(DomainError):
    pass


class HalfIntegralUnit(DomainError):
    pass


class SearchExceeded(DomainError):
    pass
