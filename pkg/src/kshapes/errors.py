"""Exception hierarchy shared by every module."""


class KShapeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KShapeError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(KShapeError, ValueError):
    """A documented precondition of an operation does not hold."""


class InvariantViolation(KShapeError, AssertionError):
    """An internal invariant failed.

    These are never expected; one being raised means a structural lemma
    about the construction has been contradicted by a concrete instance.
    """


class ResourceError(KShapeError):
    """The requested enumeration exceeds the configured budget."""


class PistolError(DomainError):
    """A value sequence is not a surjective pistol.

    ``clause`` names the violated condition: ``"length"``, ``"parity"``,
    ``"bound"``, ``"codomain"`` or ``"surjectivity"``.
    """

    def __init__(self, clause, message):
        super().__init__(message)
        self.clause = clause
