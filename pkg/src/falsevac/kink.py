"""Kink-antikink (S-S') wall profile and its gradient energy.

The field is a smoothed box of height ~2 pi and width L,

    phi(x) = pi * [tanh(b (x + L/2)) - tanh(b (x - L/2))],

and the static kinetic invariant is X(x) = (dphi/dx)^2 / 2.  As the
steepness ``b`` grows, X concentrates at the two walls x = +-L/2.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ShapeError, UnphysicalBoxLimitError

__all__ = [
    "KinkProfile",
    "GridSeries",
    "phi_of_x",
    "dphi_dx",
    "kinetic_X",
    "s_of_x",
    "kinetic_integral",
    "wall_delta_check",
    "momentum_basis",
    "MAX_STEEPNESS",
]

MAX_STEEPNESS = 1e6


@dataclass(frozen=True)
class KinkProfile:
    length_L: float = 1.0
    steepness_b: float = 10.0
    height: float = math.pi

    def __post_init__(self):
        if not self.length_L > 0:
            raise DomainError(f"length_L must be positive, got {self.length_L!r}")
        if not self.steepness_b > 0:
            raise DomainError(f"steepness_b must be positive, got {self.steepness_b!r}")


@dataclass(frozen=True)
class GridSeries:
    """A labelled curve: strictly increasing ``xs`` with matching ``ys``."""

    xs: np.ndarray
    ys: np.ndarray
    label: str = ""

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float)
        ys = np.asarray(self.ys, dtype=float)
        if xs.ndim != 1 or xs.shape != ys.shape:
            raise ShapeError(f"xs and ys must be 1-D of equal length, got {xs.shape} and {ys.shape}")
        if xs.size > 1 and not np.all(np.diff(xs) > 0):
            raise ShapeError("xs must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)

    def __len__(self):
        return self.xs.size


def phi_of_x(x, k=KinkProfile()):
    b, half = k.steepness_b, 0.5 * k.length_L
    return k.height * (np.tanh(b * (x + half)) - np.tanh(b * (x - half)))


def _sech2(z):
    # 1/cosh^2 without overflow for large |z|
    e = np.exp(-2.0 * np.abs(z))
    return 4.0 * e / (1.0 + e) ** 2


def dphi_dx(x, k=KinkProfile()):
    b, half = k.steepness_b, 0.5 * k.length_L
    return k.height * b * (_sech2(b * (x + half)) - _sech2(b * (x - half)))


def kinetic_X(x, k=KinkProfile()):
    """Static kinetic invariant X = (dphi/dx)^2 / 2."""
    return 0.5 * dphi_dx(x, k) ** 2


def s_of_x(x, k=KinkProfile()):
    return kinetic_X(x, k) ** 2


def kinetic_integral(k, step=None, window=None):
    """Midpoint-rule integral of X over ``window`` (default [-L, L]).

    Returns ``(integral, peak)``; the peak is max X over the midpoints.
    """
    lo, hi = window if window is not None else (-k.length_L, k.length_L)
    if step is None:
        step = 1e-4 * k.length_L
    n = int(math.ceil((hi - lo) / step))
    h = (hi - lo) / n
    mids = lo + h * (np.arange(n) + 0.5)
    vals = kinetic_X(mids, k)
    return float(np.sum(vals) * h), float(vals.max())


def wall_delta_check(k, b_sequence, step=None):
    """Track how X localises at the walls as the steepness grows.

    For each ``b`` in ``b_sequence`` the profile is rebuilt with that
    steepness and X integrated over [-L, L].  Peaks grow like b^2 while
    the integral only grows like b, i.e. the walls sharpen towards a
    delta-like spike.

    Returns
    -------
    (peaks, integrals) : tuple of GridSeries
        Both indexed by b.

    Raises
    ------
    UnphysicalBoxLimitError
        if any b exceeds ``MAX_STEEPNESS``.
    """
    bs = np.asarray(b_sequence, dtype=float)
    if bs.size > 1 and not np.all(np.diff(bs) > 0):
        raise DomainError("b_sequence must be increasing")
    if np.any(bs > MAX_STEEPNESS):
        raise UnphysicalBoxLimitError(
            f"unphysical box limit: steepness above {MAX_STEEPNESS:g} requested"
        )
    peaks, integrals = [], []
    for b in bs:
        kb = KinkProfile(k.length_L, float(b), k.height)
        integral, _ = kinetic_integral(kb, step)
        integrals.append(integral)
        # the exact wall position is not generally a grid midpoint
        half = 0.5 * k.length_L
        peaks.append(float(max(kinetic_X(np.array([-half, half]), kb))))
    return (
        GridSeries(bs, np.array(peaks), "peak X"),
        GridSeries(bs, np.array(integrals), "integral of X over [-L, L]"),
    )


def momentum_basis(k_n, L):
    """Fourier-space box basis sqrt(2/pi) sin(k L/2) / k.

    Finite at k = 0, where it equals sqrt(2/pi) L/2.
    """
    # sin(kL/2)/k == (L/2) * sinc(kL / 2pi) with numpy's normalised sinc
    return math.sqrt(2.0 / math.pi) * 0.5 * L * np.sinc(np.asarray(k_n) * L / (2.0 * math.pi))
