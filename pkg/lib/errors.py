"""
Error types
Every failure in the library raises one of these; nothing returns NaN or None
to signal a problem.
"""


class Bmw6Error(Exception):
    """Base class for all library errors"""


class DomainError(Bmw6Error, ValueError):
    """An argument lies outside the domain of the function"""


class MassExceededError(DomainError):
    """
    A probability at or above the total mass of a defective distribution
    (only possible when tau < 0)
    """

    def __init__(self, q: float, mass: float):
        self.q = q
        self.mass = mass
        super().__init__(
            f"probability {q!r} is not below the total mass {mass!r} "
            f"(tau < 0 leaves a cured fraction of {1.0 - mass:.6g})"
        )


class ConvergenceError(Bmw6Error, ArithmeticError):
    """An iteration cap or subdivision depth was exceeded"""


class HazardOverflowError(Bmw6Error, OverflowError):
    """Survival underflowed to zero, so pdf/survival is not representable"""


class UnsupportedFamilyError(Bmw6Error, ValueError):
    """No independent closed form exists for the requested family"""


class PreconditionError(Bmw6Error, ValueError):
    """A documented precondition of the call does not hold"""


class QuantileOverflowError(Bmw6Error, OverflowError):
    """The quantile lies beyond the largest double"""

    def __init__(self, q: float, params):
        self.q = q
        self.params = params
        super().__init__(f"quantile({q!r}) exceeds the largest double for {params}")
