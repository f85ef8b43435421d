"""Exception types raised by the library."""
from typing import Optional


class RhoTensorError(Exception):
    """Base class for every error raised by this package."""


class LieTypeError(RhoTensorError, ValueError):
    """Unparseable or inadmissible Lie type label."""


class WeightError(RhoTensorError, ValueError):
    """A weight or index does not fit the root system or the operation."""


class DomainError(RhoTensorError, ValueError):
    """An operation's precondition does not hold."""


class GuardError(RhoTensorError):
    """A configured size limit would be exceeded."""

    def __init__(self, guard: str, limit: int, estimate: Optional[int] = None, message: str = ""):
        self.guard = guard
        self.limit = limit
        self.estimate = estimate
        if not message:
            size = f"estimated size {estimate}" if estimate is not None else "size unknown"
            message = f"{guard} guard exceeded: {size}, limit {limit}"
        super().__init__(message)


class InternalCheckError(RhoTensorError, RuntimeError):
    """An identity that holds mathematically failed; indicates a bug."""
