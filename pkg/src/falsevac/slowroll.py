"""Hubble rate and slow-roll diagnostics on the working potential V1."""

import math
from dataclasses import dataclass

from .errors import DomainError
from .potential import PotentialParams, v1, v1_d1, v1_d2
from .units import planck_units

__all__ = ["SlowRollReport", "hubble_squared", "slow_roll_report", "FLATNESS_THRESHOLD"]

_U = planck_units()

FLATNESS_THRESHOLD = 0.15


@dataclass(frozen=True)
class SlowRollReport:
    phi: float
    v: float
    h_squared: float
    v_dd_abs: float
    ratio: float
    epsilon_sr: float
    eta_sr: float
    passes_flat: bool
    passes_negative_pressure: bool


def hubble_squared(v):
    """H^2 = (8 pi / 3) G V."""
    if v < 0:
        raise DomainError("potential must be non-negative where H^2 is evaluated")
    return 8.0 * math.pi / 3.0 * _U.G * v


def slow_roll_report(phi, p=PotentialParams(), flatness_threshold=FLATNESS_THRESHOLD):
    """Evaluate the flatness ratio |V''|/H^2 and the slow-roll parameters at ``phi``.

    The potential is V1 (no initial energy density offset).  The slow-roll
    parameters use the reduced Planck mass, M_p^2 / 8 pi.
    """
    v = float(v1(phi, p))
    if not v > 0:
        raise DomainError(f"slow_roll_report needs V1(phi) > 0, got {v!r} at phi = {phi!r}")
    d1 = float(v1_d1(phi, p))
    d2 = float(v1_d2(phi, p))
    h2 = hubble_squared(v)
    ratio = abs(d2) / h2
    mp2 = _U.reduced_planck_mass_sq
    eps = 0.5 * mp2 * (d1 / v) ** 2
    eta = mp2 * d2 / v
    return SlowRollReport(
        phi=float(phi),
        v=v,
        h_squared=h2,
        v_dd_abs=abs(d2),
        ratio=ratio,
        epsilon_sr=eps,
        eta_sr=eta,
        passes_flat=ratio < flatness_threshold,
        passes_negative_pressure=eps < 1 and abs(eta) < 1,
    )
