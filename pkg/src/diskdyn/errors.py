"""Exception types shared across the package."""


class DiskDynError(Exception):
    """Base class for all library errors."""


class DomainError(DiskDynError, ValueError):
    """A point lies outside (or on the boundary of) its model's domain."""


class DegenerateInputError(DiskDynError, ValueError):
    """An input makes the requested quantity undefined (e.g. <Z,X> = 1)."""


class ModelMismatchError(DiskDynError, ValueError):
    """Maps or points from incompatible models were combined."""


class EvaluationError(DiskDynError, RuntimeError):
    """A map evaluation left the domain; carries the step index and margin."""

    def __init__(self, message, index=None, margin=None):
        super().__init__(message)
        self.index = index
        self.margin = margin


class PreconditionError(DiskDynError, RuntimeError):
    """An operation's precondition (e.g. 'spec is parabolic') failed."""


class EstimationError(DiskDynError, RuntimeError):
    """A numerical estimate could not be formed (e.g. starts disagree)."""
