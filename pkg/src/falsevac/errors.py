"""Exception types raised by falsevac."""


class FalseVacError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FalseVacError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class NoDoubleWellError(FalseVacError):
    """The potential does not have two minima in the searched interval."""


class NonFiniteError(FalseVacError, ArithmeticError):
    """A computation produced NaN or infinity."""


class SingularError(FalseVacError, ZeroDivisionError):
    """A ratio has a vanishing denominator.

    ``kind`` is ``"eos-singular"`` or ``"cs2-singular"``; ``x_val`` is the
    kinetic argument at which it happened.
    """

    def __init__(self, kind, x_val):
        self.kind = kind
        self.x_val = x_val
        super().__init__(f"{kind}: vanishing denominator at X = {x_val!r}")


class DegenerateKineticError(FalseVacError):
    """The coefficient of the second time derivative crossed zero."""

    def __init__(self, t_cross):
        self.t_cross = t_cross
        super().__init__(f"degenerate-kinetic: F_X + 2X F_XX changes sign near t = {t_cross!r}")


class UnphysicalBoxLimitError(FalseVacError, ValueError):
    """Wall steepness so large that the profile is effectively a box."""


class ShapeError(FalseVacError, ValueError):
    """Grids that must share abscissae do not."""


class TunnelingUnderflowWarning(RuntimeWarning):
    """Initial and final wave functionals do not overlap numerically."""
