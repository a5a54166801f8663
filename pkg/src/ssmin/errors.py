"""Exception types shared across the package."""


class VerifierError(Exception):
    """Base class for every error raised by this package."""


class DomainError(VerifierError):
    """Evaluation outside the domain of a function or profile."""


class QuadratureFailure(VerifierError):
    """Adaptive quadrature exhausted its depth budget before reaching tolerance."""


class DegenerateSurface(VerifierError):
    """EG - F^2 is not positive: degenerate, or not spacelike in Minkowski space."""


class UnknownCase(VerifierError):
    """Identifier does not name a classified minimality case."""


class IllConditionedFit(VerifierError):
    """Least-squares fit is rank deficient or otherwise meaningless."""


class BlowUp(VerifierError):
    """ODE trajectory exceeded the blow-up threshold."""

    def __init__(self, message: str, t: float | None = None):
        super().__init__(message)
        self.t = t


class InvalidStep(VerifierError):
    """Integration step or span is unusable."""


class DomainMismatch(VerifierError):
    """Trajectory nodes fall outside the profile being compared against."""


class ParameterConstraintViolation(VerifierError):
    """Solution-family parameters violate their admissibility constraints."""


class EmptyDomain(VerifierError):
    """The admissible (u, v) region of a family is empty."""
