"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """An argument does not describe a valid object (bad vertex, bad partition, ...)."""


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. pivot on a non-edge)."""


class CapacityError(RuntimeError):
    """An exhaustive routine was asked to run past its configured size ceiling."""


class InternalConsistencyError(AssertionError):
    """Two independent computations that must agree did not."""
