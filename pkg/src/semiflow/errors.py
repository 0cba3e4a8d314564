"""Exception types shared across semiflow."""


class DomainError(ValueError):
    """A point lies outside the domain an operation is defined on."""


class NoConvergence(ArithmeticError):
    """An iterative solver ran out of steps before meeting its tolerance."""

    def __init__(self, msg, t=None):
        super().__init__(msg if t is None else f"{msg} (at t={t!r})")
        self.t = t


class DomainEscape(NoConvergence):
    """Damped Newton could not keep its iterate inside the parameter domain."""


class CapabilityError(ValueError):
    """The model does not support the requested workload."""


class InsufficientSamples(ValueError):
    """Too few samples fall inside the fitting window."""
