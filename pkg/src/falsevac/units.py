"""Planck-unit conventions and the few physical constants the model needs.

Everything in the package is dimensionless: hbar = c = G = 1, so the Planck
mass, time and length are all 1 as well.  Nothing is ever converted back to
SI.
"""

import math
from dataclasses import dataclass

__all__ = ["PlanckUnits", "MassConstants", "planck_units", "mass_constants"]

ELECTRON_MASS_PLANCK = 4.338e-20


@dataclass(frozen=True)
class PlanckUnits:
    """Normalisation record; every field is fixed to exactly 1."""

    m_p: float = 1.0
    hbar: float = 1.0
    c: float = 1.0
    G: float = 1.0
    t_p: float = 1.0
    l_p: float = 1.0

    def __post_init__(self):
        for name in ("m_p", "hbar", "c", "G", "t_p", "l_p"):
            if getattr(self, name) != 1.0:
                raise ValueError(f"PlanckUnits.{name} must be 1.0, got {getattr(self, name)!r}")

    @property
    def reduced_planck_mass_sq(self):
        """M_p^2 / (8 pi), the squared reduced Planck mass."""
        return self.m_p**2 / (8.0 * math.pi)


@dataclass(frozen=True)
class MassConstants:
    """Electron mass in Planck units and the effective pair mass 2 m_e."""

    m_e: float = ELECTRON_MASS_PLANCK

    @property
    def m_star(self):
        return 2.0 * self.m_e


_UNITS = PlanckUnits()
_MASSES = MassConstants()


def planck_units():
    """Return the canonical all-ones :class:`PlanckUnits` record."""
    return _UNITS


def mass_constants():
    return _MASSES
