"""Nucleation rates and Gaussian wave-functional tunneling amplitudes.

Covers the gravitationally corrected bounce rate, the pair number density
per unit length in de Sitter space, the closed-form CDW-style transfer
amplitude, the normalisation of the Gaussian functionals, a one-mode
quadrature of the tunneling matrix element, and the golden-rule wrapper.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from .errors import DomainError, NonFiniteError, ShapeError, TunnelingUnderflowWarning
from .kink import GridSeries
from .units import mass_constants

__all__ = [
    "NucleationInputs",
    "WaveFunctional",
    "cdl_rate",
    "garriga_density",
    "transfer_closed_form",
    "normalization_constant",
    "trapezoid_weights",
    "gaussian_functional",
    "one_mode_reduction",
    "transfer_one_mode",
    "transfer_discretized",
    "golden_rule_rate",
    "UNDERFLOW_LIMIT",
]

_M = mass_constants()

UNDERFLOW_LIMIT = 1e-300


@dataclass(frozen=True)
class NucleationInputs:
    """Parameters of the rate formulas.

    ``alpha_gap`` defaults to ``1 / length_L`` so the Gaussian width and the
    pair separation come from the same energy gap.  The length and vantage
    point defaults are the quoted L = 1/0.041 = 24.39 and x = V(phi_F) = 0.663.
    """

    prefactor_A: float = 1.0
    s_bounce: float = 0.0
    m_field: float = 0.441
    mass_M: float = 1.0
    e_charge: float = 0.0
    e_field_E0: float = 0.0
    hubble_H: float = 1.0
    s_euclid: float = 0.0
    length_L: float = 24.39
    x_vantage: float = 0.663
    alpha_gap: float = field(default=None)

    def __post_init__(self):
        if self.alpha_gap is None:
            object.__setattr__(self, "alpha_gap", 1.0 / self.length_L)
        if self.mass_M > 1.0:
            raise DomainError(f"mass_M must not exceed the Planck mass, got {self.mass_M!r}")


def cdl_rate(n=NucleationInputs()):
    """Bounce rate A exp(-S_b + S_t).

    The gravitational term is S_t = -(3/8) rho_t with rho_t at its lower
    bound (60 / 4 pi) m^2.
    """
    rho_t = 60.0 / (4.0 * math.pi) * n.m_field**2
    s_t = -3.0 / 8.0 * rho_t
    return n.prefactor_A * math.exp(-n.s_bounce + s_t)


def garriga_density(n=NucleationInputs()):
    """Pair number density per unit length, sqrt(M^2 + e E0^2 / H^2) exp(-S_E) / 2pi."""
    field_term = n.e_charge * n.e_field_E0**2
    if field_term != 0 and n.hubble_H == 0:
        raise DomainError("garriga_density needs H > 0 when the field term is non-zero")
    extra = field_term / n.hubble_H**2 if field_term != 0 else 0.0
    return math.sqrt(n.mass_M**2 + extra) * math.exp(-n.s_euclid) / (2.0 * math.pi)


def transfer_closed_form(n=NucleationInputs(), c1=1.0, c2=1.0, m_star=None):
    """Closed-form transfer amplitude |T_IF|.

    (c1 c2 / m*) cosh(2 sqrt(x / 2L) - sqrt(L / 2x)) exp(-alpha L (L / 2x)).
    """
    x, L = n.x_vantage, n.length_L
    if not x > 0:
        raise DomainError(f"x_vantage must be positive, got {x!r}")
    if not L > 0:
        raise DomainError(f"length_L must be positive, got {L!r}")
    if m_star is None:
        m_star = _M.m_star
    arg = 2.0 * math.sqrt(x / (2.0 * L)) - math.sqrt(L / (2.0 * x))
    return c1 * c2 / m_star * math.cosh(arg) * math.exp(-n.alpha_gap * L * (L / (2.0 * x)))


def normalization_constant(bracket_i, L):
    """C = [int_0^(L^2/2pi) exp(-2 bracket u^2) du]^(-1/2), by adaptive quadrature."""
    if not L > 0:
        raise DomainError(f"L must be positive, got {L!r}")
    upper = L**2 / (2.0 * math.pi)
    f = lambda u: math.exp(-2.0 * bracket_i * u * u)
    # split where the Gaussian has died off so quad sees the peak
    pts = []
    if bracket_i > 0:
        knee = 8.0 / math.sqrt(2.0 * bracket_i)
        if knee < upper:
            pts = [knee]
    edges = [0.0, *pts, upper]
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(f, a, b, epsabs=0.0, epsrel=1e-13, limit=200)
        total += val
    if not (math.isfinite(total) and total > 0):
        raise NonFiniteError(f"normalisation integral is {total!r}")
    return total**-0.5


def trapezoid_weights(xs):
    xs = np.asarray(xs, dtype=float)
    w = np.zeros_like(xs)
    if xs.size > 1:
        d = np.diff(xs)
        w[:-1] += 0.5 * d
        w[1:] += 0.5 * d
    return w


def _check_same_grid(a, b):
    if a.xs.shape != b.xs.shape or not np.array_equal(a.xs, b.xs):
        raise ShapeError("field configurations must share abscissae")


def gaussian_functional(field_cfg, center, alpha, c_norm):
    """Evaluate c exp(-alpha sum_i (phi_i - center_i)^2 dx_i) with trapezoid weights."""
    _check_same_grid(field_cfg, center)
    w = trapezoid_weights(field_cfg.xs)
    return c_norm * math.exp(-alpha * float(np.sum((field_cfg.ys - center.ys) ** 2 * w)))


@dataclass(frozen=True)
class WaveFunctional:
    """Gaussian wave functional centred on a field configuration."""

    norm_c: float
    width_alpha: float
    center: GridSeries
    label: str = "initial"

    def __post_init__(self):
        if not self.norm_c > 0 or not self.width_alpha > 0:
            raise DomainError("norm_c and width_alpha must be positive")
        if self.label not in ("initial", "final"):
            raise DomainError(f"label must be 'initial' or 'final', got {self.label!r}")

    def __call__(self, field_cfg):
        return gaussian_functional(field_cfg, self.center, self.width_alpha, self.norm_c)


def one_mode_reduction(psi):
    """Collapse a functional onto spatially constant configurations phi(x) = u.

    For constant u the exponent is alpha W (u - ubar)^2 + alpha S, with W the
    total weight, ubar the weighted mean of the centre and S its weighted
    spread, so the functional is a one-dimensional Gaussian in u.

    Returns ``(amplitude, width, center)``.
    """
    w = trapezoid_weights(psi.center.xs)
    total = float(np.sum(w))
    ubar = float(np.sum(w * psi.center.ys)) / total
    spread = float(np.sum(w * (psi.center.ys - ubar) ** 2))
    return psi.norm_c * math.exp(-psi.width_alpha * spread), psi.width_alpha * total, ubar


def _gauss(u, amp, a, u0):
    return amp * math.exp(-a * (u - u0) ** 2)


def _gauss_dd(u, amp, a, u0):
    d = u - u0
    return _gauss(u, amp, a, u0) * (4.0 * a * a * d * d - 2.0 * a)


def transfer_one_mode(gi, gf, threshold, upper, m_e=None, lower=0.0):
    """Matrix element for two real Gaussians in a single collective coordinate.

    ``gi`` and ``gf`` are ``(amplitude, width, center)`` triples.  Computes

        1/(2 m_e) int_lower^upper [psi_i psi_f'' - psi_f psi_i''] theta(u - threshold) du

    with theta(0) = 1.  Returns 0 and emits :class:`TunnelingUnderflowWarning`
    if the magnitude is below ``UNDERFLOW_LIMIT``.
    """
    if m_e is None:
        m_e = _M.m_e
    a = max(lower, threshold)
    if a >= upper or tuple(gi) == tuple(gf):
        return 0.0

    def integrand(u):
        return _gauss(u, *gi) * _gauss_dd(u, *gf) - _gauss(u, *gf) * _gauss_dd(u, *gi)

    # break points at the centres keep quad from stepping over the peaks
    pts = sorted({c for c in (gi[2], gf[2]) if a < c < upper})
    edges = [a, *pts, upper]
    # the full-line integral cancels exactly, so a purely relative target can
    # be unreachable; pin the absolute floor to the integrand's own scale
    floor = 1e-13 * gi[0] * gf[0] * math.sqrt(max(gi[1], gf[1]))
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(integrand, lo, hi, epsabs=floor, epsrel=1e-10, limit=400)
        total += val
    if not math.isfinite(total):
        raise NonFiniteError("tunneling integral is not finite")
    if abs(total) < UNDERFLOW_LIMIT:
        warnings.warn("initial and final functionals do not overlap", TunnelingUnderflowWarning)
        return 0.0
    return total / (2.0 * m_e)


def transfer_discretized(psi_i, psi_f, barrier_phi0, length_L, m_e=None):
    """Tunneling matrix element between two wave functionals.

    Both functionals are reduced to a single collective coordinate (see
    :func:`one_mode_reduction`); the barrier configuration reduces to its
    weighted mean, which becomes the step threshold.  The integral runs over
    [0, L^2 / 2pi].
    """
    _check_same_grid(psi_i.center, psi_f.center)
    _check_same_grid(psi_i.center, barrier_phi0)
    w = trapezoid_weights(barrier_phi0.xs)
    threshold = float(np.sum(w * barrier_phi0.ys) / np.sum(w))
    upper = length_L**2 / (2.0 * math.pi)
    return transfer_one_mode(
        one_mode_reduction(psi_i), one_mode_reduction(psi_f), threshold, upper, m_e
    )


def golden_rule_rate(t_matrix, rho_states):
    """Fermi golden rule 2 pi |T|^2 rho (hbar = 1)."""
    if rho_states < 0:
        raise DomainError("density of states must be non-negative")
    return 2.0 * math.pi * abs(t_matrix) ** 2 * rho_states
