"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """Input is well-formed but outside the domain of an operation."""


class ZeroDenominatorError(ZeroDivisionError):
    pass


class ZeroParameterError(DomainError):
    pass


class SingularAngleError(DomainError):
    """Raised for cos = -1, i.e. an angle of pi with no finite generator."""


class InvolutionSingularError(DomainError):
    pass


class ZeroGeneratorError(DomainError):
    pass


class ExceptionalPairError(DomainError):
    """The affine addition law has a vanishing denominator for this pair."""


class NotOnCurveError(DomainError):
    pass


class DegenerateGeneratorError(DomainError):
    pass


class NonPositiveScaleError(DomainError):
    pass
