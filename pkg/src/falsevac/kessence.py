"""Pure-kinetic k-essence: pressure, density, equation of state, sound speed.

The kinetic function is expanded about its extremum,

    F(X) = F0 + F2 (X - X0)^2,

with pressure p = V(phi) F(X) and density rho = V(phi) (2 X F_X - F).  The
potential cancels in w = p / rho.

Two conventions for X coexist.  The wall formulas use the static gradient
X = (dphi/dx)^2 / 2 (see :mod:`falsevac.kink`); the field dynamics in
:func:`integrate_field_equation` use the homogeneous X = phidot^2 / 2.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateKineticError, DomainError, NonFiniteError, SingularError
from .kink import GridSeries
from .potential import PotentialParams, v1, v1_d1, v_total
from .slowroll import hubble_squared

__all__ = [
    "KEssenceModel",
    "EosPoint",
    "f_of_x",
    "f_x",
    "f_xx",
    "pressure",
    "pressure_wall",
    "density",
    "density_wall_approx",
    "equation_of_state",
    "eos_point",
    "w_correction_terms",
    "sound_speed_sq",
    "paper_cs2_form",
    "epsilon_decay",
    "integrate_field_equation",
    "FieldTrajectory",
]



@dataclass(frozen=True)
class KEssenceModel:
    """Coefficients of the kinetic expansion and the background potential.

    ``f0`` defaults to 1e6 = f2^2, the only choice for which the two printed
    groupings of the w correction, 4 X0 (F2/F0) eps0 and 4 X0 eps0 / F2,
    coincide (both 0.04 at the default wall values).
    """

    f0: float = 1e6
    f2: float = 1e3
    x0: float = 1e3
    eps0: float = 1e-2
    v0: float = 0.775

    def __post_init__(self):
        if not self.f2 > 0:
            raise DomainError(f"f2 must be positive, got {self.f2!r}")
        if not self.eps0 >= 0:
            raise DomainError(f"eps0 must be non-negative, got {self.eps0!r}")
        if not self.v0 > 0:
            raise DomainError(f"v0 must be positive, got {self.v0!r}")

    def with_x0(self, x0):
        return KEssenceModel(self.f0, self.f2, x0, self.eps0, self.v0)


@dataclass(frozen=True)
class EosPoint:
    x_val: float
    pressure: float
    density: float
    w: float
    cs2: float


def f_of_x(x_val, m=KEssenceModel()):
    return m.f0 + m.f2 * (x_val - m.x0) ** 2


def f_x(x_val, m=KEssenceModel()):
    return 2.0 * m.f2 * (x_val - m.x0)


def f_xx(x_val, m=KEssenceModel()):
    return 2.0 * m.f2 + 0.0 * x_val


def pressure(phi_val, x_val, m=KEssenceModel(), p=PotentialParams()):
    """p = V1(phi) F(X)."""
    return v1(phi_val, p) * f_of_x(x_val, m)


def pressure_wall(m=KEssenceModel()):
    """Constant-background pressure at X = X0 + eps0: V0 (F0 + F2 eps0^2)."""
    return m.v0 * f_of_x(m.x0 + m.eps0, m)


def _rho_factor(x_val, m):
    return 2.0 * x_val * f_x(x_val, m) - f_of_x(x_val, m)


def density(phi_val, x_val, m=KEssenceModel(), p=PotentialParams()):
    """rho = V1(phi) (2 X F_X - F)."""
    return v1(phi_val, p) * _rho_factor(x_val, m)


def density_wall_approx(m=KEssenceModel()):
    """First-order wall density V0 (4 F2 X0 eps0 - F0)."""
    return m.v0 * (4.0 * m.f2 * m.x0 * m.eps0 - m.f0)


def equation_of_state(x_val, m=KEssenceModel()):
    """w = F / (2 X F_X - F); independent of the potential."""
    den = _rho_factor(x_val, m)
    if np.any(den == 0):
        raise SingularError("eos-singular", x_val)
    return f_of_x(x_val, m) / den


def w_correction_terms(m=KEssenceModel()):
    """The two printed groupings of the w correction near the wall.

    Returns a dict with the correction terms and the resulting
    w = -1 / (1 - term) for ``"f2_over_f0"`` = 4 X0 (F2/F0) eps0 and
    ``"over_f2"`` = 4 X0 eps0 / F2.
    """
    t_a = 4.0 * m.x0 * (m.f2 / m.f0) * m.eps0
    t_b = 4.0 * m.x0 * m.eps0 / m.f2
    return {
        "f2_over_f0": t_a,
        "over_f2": t_b,
        "w_f2_over_f0": -1.0 / (1.0 - t_a),
        "w_over_f2": -1.0 / (1.0 - t_b),
    }


def sound_speed_sq(x_val, m=KEssenceModel()):
    """Effective sound speed F_X / (F_X + 2 X F_XX).

    For the quadratic F and X = X0 + e this is e / (3 e + 2 X0).
    """
    num = f_x(x_val, m)
    den = num + 2.0 * x_val * f_xx(x_val, m)
    if np.any(den == 0):
        raise SingularError("cs2-singular", x_val)
    return num / den


def eos_point(phi_val, x_val, m=KEssenceModel(), p=PotentialParams()):
    return EosPoint(
        x_val=float(x_val),
        pressure=float(pressure(phi_val, x_val, m, p)),
        density=float(density(phi_val, x_val, m, p)),
        w=float(equation_of_state(x_val, m)),
        cs2=float(sound_speed_sq(x_val, m)),
    )


def paper_cs2_form(x0, eps0):
    """Closed form 1 / (1 + 4 X0 (1 + X0 / (2 eps0))) kept exactly as printed.

    It does not follow from :func:`sound_speed_sq`; the two differ most
    visibly as X0 -> 0 (1 here, 1/3 there).
    """
    x0 = np.asarray(x0, dtype=float)
    if eps0 == 0:
        out = np.where(x0 == 0, 1.0, 0.0)
    else:
        out = 1.0 / (1.0 + 4.0 * x0 * (1.0 + x0 / (2.0 * eps0)))
    return float(out) if out.ndim == 0 else out


def epsilon_decay(t, eps0, v0):
    """eps0 exp(-8 pi V0 t), the printed decay law for the kinetic offset."""
    if np.any(np.asarray(t) < 0):
        raise DomainError("t must be non-negative")
    return eps0 * np.exp(-8.0 * math.pi * v0 * t)


@dataclass(frozen=True)
class FieldTrajectory:
    """Output of :func:`integrate_field_equation`."""

    t: np.ndarray
    phi: np.ndarray
    dphi: np.ndarray
    hubble: np.ndarray

    @property
    def X(self):
        return 0.5 * self.dphi**2

    def series(self, which="phi"):
        return GridSeries(self.t, getattr(self, which), which)


def integrate_field_equation(
    m,
    p,
    phi_init,
    dphi_init,
    t_end,
    dt,
    *,
    constant_v=None,
    hubble=None,
):
    """Integrate the homogeneous k-essence field equation with fixed-step RK4.

        (F_X + 2 X F_XX) phi'' + 3 H F_X phi' + (2 X F_X - F) V_phi / V = 0

    with X = phi'^2 / 2 and H = sqrt(8 pi V / 3).

    Parameters
    ----------
    m : KEssenceModel
    p : PotentialParams
        Potential used for V and V_phi unless ``constant_v`` is given.
    constant_v : float, optional
        Hold V fixed at this value and drop the V_phi term (the
        constant-background reduction).
    hubble : float, optional
        Override the Hubble rate (e.g. 0 to switch off damping).

    Returns
    -------
    FieldTrajectory

    Raises
    ------
    DegenerateKineticError
        if F_X + 2 X F_XX changes sign along the trajectory.
    NonFiniteError
        if the state stops being finite.
    """
    if not dt > 0:
        raise DomainError("dt must be positive")
    if t_end < 0:
        raise DomainError("t_end must be non-negative")

    if constant_v is not None:
        h_const = math.sqrt(hubble_squared(constant_v)) if hubble is None else hubble

        def accel(phi, dphi):
            x = 0.5 * dphi * dphi
            fx = f_x(x, m)
            return -3.0 * h_const * fx * dphi / (fx + 2.0 * x * f_xx(x, m)), h_const

    else:

        def accel(phi, dphi):
            x = 0.5 * dphi * dphi
            fx = f_x(x, m)
            v = float(v_total(phi, p))
            h = math.sqrt(hubble_squared(v)) if hubble is None else hubble
            force = _rho_factor(x, m) * float(v1_d1(phi, p)) / v
            return -(3.0 * h * fx * dphi + force) / (fx + 2.0 * x * f_xx(x, m)), h

    def kin_coeff(dphi):
        x = 0.5 * dphi * dphi
        return f_x(x, m) + 2.0 * x * f_xx(x, m)

    n = int(round(t_end / dt))
    ts = np.arange(n + 1) * dt
    phis = np.empty(n + 1)
    dphis = np.empty(n + 1)
    hs = np.empty(n + 1)
    phi, dphi = float(phi_init), float(dphi_init)
    phis[0], dphis[0] = phi, dphi
    sign0 = math.copysign(1.0, kin_coeff(dphi))
    if kin_coeff(dphi) == 0:
        raise DegenerateKineticError(0.0)
    _, hs[0] = accel(phi, dphi)

    for i in range(n):
        a1, _ = accel(phi, dphi)
        k1p, k1v = dphi, a1
        a2, _ = accel(phi + 0.5 * dt * k1p, dphi + 0.5 * dt * k1v)
        k2p, k2v = dphi + 0.5 * dt * k1v, a2
        a3, _ = accel(phi + 0.5 * dt * k2p, dphi + 0.5 * dt * k2v)
        k3p, k3v = dphi + 0.5 * dt * k2v, a3
        a4, _ = accel(phi + dt * k3p, dphi + dt * k3v)
        k4p, k4v = dphi + dt * k3v, a4
        phi = phi + dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        dphi = dphi + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        if not (math.isfinite(phi) and math.isfinite(dphi)):
            raise NonFiniteError(f"non-finite field state at t = {ts[i + 1]!r}")
        if math.copysign(1.0, kin_coeff(dphi)) != sign0 or kin_coeff(dphi) == 0:
            raise DegenerateKineticError(float(ts[i + 1]))
        phis[i + 1], dphis[i + 1] = phi, dphi
        _, hs[i + 1] = accel(phi, dphi)

    return FieldTrajectory(ts, phis, dphis, hs)
