"""Numerical toolkit for a false-vacuum / k-essence model of universe nucleation."""

from .errors import (
    DegenerateKineticError,
    DomainError,
    FalseVacError,
    NoDoubleWellError,
    NonFiniteError,
    ShapeError,
    SingularError,
    TunnelingUnderflowWarning,
    UnphysicalBoxLimitError,
)
from .kessence import *  # noqa: F401,F403
from .kink import *  # noqa: F401,F403
from .nucleation import *  # noqa: F401,F403
from .potential import *  # noqa: F401,F403
from .slowroll import *  # noqa: F401,F403
from .units import MassConstants, PlanckUnits, mass_constants, planck_units

__version__ = "0.1.0"
