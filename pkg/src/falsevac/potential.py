"""Tilted sine-Gordon potential family, its derivatives and vacuum structure.

The working potential is

    V1(phi) = cos_coeff * (1 - cos phi) + (m^2 / 2) * (phi - phi_star)^2

with the total potential ``V = rho_init + V1``.  All functions accept floats
or numpy arrays.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoDoubleWellError, NonFiniteError
from .units import planck_units

__all__ = [
    "PotentialParams",
    "VacuumSolution",
    "BracketTerms",
    "ExtendedSGParams",
    "v1",
    "v_total",
    "v1_d1",
    "v1_d2",
    "chaotic_potential",
    "chaotic_phi_of_t",
    "guth_bound",
    "phi_star_formula",
    "find_vacua",
    "bracket_terms",
    "bracket_a_unsimplified",
    "extended_sg",
    "lagrangian_density",
    "bogomilnyi_bound",
]

_U = planck_units()

# Scan / bisection / degeneracy tolerances for find_vacua.
SCAN_STEP = 1e-3
BISECT_TOL = 1e-12
DEGENERATE_RTOL = 1e-12


@dataclass(frozen=True)
class PotentialParams:
    """Constants of the potential family.

    ``cos_coeff`` is 0.5 (= M_p^2 / 2) by default; 0.5989 is the alternate
    coefficient used for the extended sine-Gordon comparison.
    """

    m: float = 0.441
    phi_star: float = 0.99 * math.pi
    cos_coeff: float = 0.5
    rho_init: float = 0.0

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"m must be positive, got {self.m!r}")
        if not self.cos_coeff > 0:
            raise DomainError(f"cos_coeff must be positive, got {self.cos_coeff!r}")
        if not self.rho_init >= 0:
            raise DomainError(f"rho_init must be non-negative, got {self.rho_init!r}")


@dataclass(frozen=True)
class VacuumSolution:
    """Stationary points of V1 between two flanking minima.

    ``phi_F`` is the minimum with the larger potential (false vacuum),
    ``phi_T`` the lower one.  When the two wells are degenerate,
    ``delta_E`` is 0, ``degenerate`` is set and ``length_L`` is NaN.
    """

    phi_F: float
    phi_T: float
    phi_barrier: float
    delta_E: float
    length_L: float
    degenerate: bool = False


@dataclass(frozen=True)
class BracketTerms:
    bracket_A: float
    bracket_B: float
    bracket: float
    gap_from_brackets: float


@dataclass(frozen=True)
class ExtendedSGParams:
    c1: float = 0.0
    c2: float = 0.0
    phi_0: float = 0.0

    def __post_init__(self):
        if self.c1 < 0 or self.c2 < 0:
            raise DomainError("extended sine-Gordon coefficients must be non-negative")


def v1(phi, p=PotentialParams()):
    return p.cos_coeff * (1.0 - np.cos(phi)) + 0.5 * p.m**2 * (phi - p.phi_star) ** 2


def v_total(phi, p=PotentialParams()):
    """V1 shifted by the initial energy density ``rho_init``."""
    return p.rho_init + v1(phi, p)


def v1_d1(phi, p=PotentialParams()):
    return p.cos_coeff * np.sin(phi) + p.m**2 * (phi - p.phi_star)


def v1_d2(phi, p=PotentialParams()):
    return p.cos_coeff * np.cos(phi) + p.m**2


def chaotic_potential(phi, m):
    """Harmonic inflaton potential m^2 phi^2 / 2."""
    return 0.5 * m**2 * phi**2


def chaotic_phi_of_t(t, phi0_tilde, m):
    """Linear slow-roll trajectory of the chaotic model, phi0 - m t / sqrt(12 pi G)."""
    if np.any(np.asarray(t) < 0):
        raise DomainError("t must be non-negative")
    return phi0_tilde - m / math.sqrt(12.0 * math.pi * _U.G) * t


def guth_bound():
    """Lower bound sqrt(60 / 2pi) on the initial inflaton value, in Planck masses."""
    return math.sqrt(60.0 / (2.0 * math.pi)) * _U.m_p


def phi_star_formula(m):
    """Field value where classical and quantum fluctuations are comparable.

    (3 / 16 pi)^(1/4) * M_p^(3/2) / m^(1/2), with M_p = 1.
    """
    if not m > 0:
        raise DomainError(f"phi_star_formula needs m > 0, got {m!r}")
    return (3.0 / (16.0 * math.pi)) ** 0.25 * _U.m_p**1.5 / math.sqrt(m)


def _bisect(f, a, b, fa, tol):
    # invariant: f(a) and f(b) have opposite signs (or f(a) == 0)
    while b - a >= tol:
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
        if mid == a and mid == b:
            break
    return 0.5 * (a + b)


def _stationary_points(p, lo, hi):
    n = int(math.ceil((hi - lo) / SCAN_STEP)) + 1
    xs = np.linspace(lo, hi, n)
    d1 = v1_d1(xs, p)
    if not np.all(np.isfinite(d1)):
        raise NonFiniteError(f"non-finite V1' encountered for {p!r}")

    f = lambda x: float(v1_d1(x, p))
    roots = []
    for i in range(n - 1):
        a, b = xs[i], xs[i + 1]
        fa, fb = d1[i], d1[i + 1]
        if fa == 0.0:
            roots.append(float(a))
            continue
        if fa * fb < 0:
            r = _bisect(f, float(a), float(b), float(fa), BISECT_TOL)
            # one Newton polish step, kept only if it improves the residual
            fr = f(r)
            step = fr / float(v1_d2(r, p))
            cand = r - step
            if abs(cand - r) < BISECT_TOL and abs(f(cand)) < abs(fr):
                r = cand
            roots.append(r)
    if d1[-1] == 0.0:
        roots.append(float(xs[-1]))
    return roots


def find_vacua(p=PotentialParams(), search_lo=0.0, search_hi=2.0 * math.pi):
    """Locate the false vacuum, true vacuum and the barrier between them.

    Stationary points come from a scan of V1' at step ``SCAN_STEP`` followed
    by bisection to ``BISECT_TOL`` and one Newton polish step.  If more than
    two minima are present the two deepest are used, together with the
    highest maximum between them.

    Raises
    ------
    NoDoubleWellError
        fewer than two minima in ``[search_lo, search_hi]``.
    """
    if not search_lo < search_hi:
        raise DomainError("search_lo must be smaller than search_hi")
    roots = _stationary_points(p, search_lo, search_hi)
    curv = [float(v1_d2(r, p)) for r in roots]
    minima = [r for r, c in zip(roots, curv) if c > 0]
    if len(minima) < 2:
        raise NoDoubleWellError(
            f"no-double-well: {len(minima)} minimum found in [{search_lo}, {search_hi}] for {p!r}"
        )
    a, b = sorted(sorted(minima, key=lambda r: float(v1(r, p)))[:2])
    maxima = [r for r, c in zip(roots, curv) if c < 0 and a < r < b]
    if not maxima:
        raise NoDoubleWellError(f"no-double-well: no barrier between minima for {p!r}")
    barrier = max(maxima, key=lambda r: float(v1(r, p)))

    va, vb = float(v1(a, p)), float(v1(b, p))
    if abs(va - vb) <= DEGENERATE_RTOL * max(1.0, abs(va), abs(vb)):
        return VacuumSolution(a, b, barrier, 0.0, math.nan, degenerate=True)
    phi_F, phi_T = (a, b) if va > vb else (b, a)
    gap = abs(va - vb)
    return VacuumSolution(phi_F, phi_T, barrier, gap, 1.0 / gap)


def bracket_a_unsimplified(m):
    """The A bracket as printed, (m^-2 + 1) / (2 m^-2)."""
    inv = m**-2
    return (inv + 1.0) / (2.0 * inv)


def bracket_terms(p, vs=None, *, phi_F=None, phi_T=None):
    """Energy-gap brackets tying the well positions to 1/L.

    ``{}_A = (1 + m^2)/2`` and ``{}_B = phi_T phi_F / 6``; the gap is half
    their difference.  Well positions come from ``vs`` unless ``phi_F`` and
    ``phi_T`` are given explicitly (e.g. quoted values).
    """
    if p.m == 0:
        raise DomainError("bracket_terms is undefined for m = 0")
    if phi_F is None:
        phi_F = vs.phi_F
    if phi_T is None:
        phi_T = vs.phi_T
    a = 0.5 * (1.0 + p.m**2)
    b = phi_T * phi_F * _U.m_p**2 / 6.0
    br = a - b
    return BracketTerms(a, b, br, 0.5 * br)


def extended_sg(phi, q=ExtendedSGParams()):
    """Extended sine-Gordon template potential."""
    d = phi - q.phi_0
    return q.c1 * d**2 - 4.0 * q.c2 * phi * q.phi_0 * d**2 + q.c2 * (phi**2 - q.phi_0**2) ** 2


def lagrangian_density(phi, dphi_dx, p=PotentialParams()):
    """Static 1-D Lagrangian density (phi')^2 / 2 - V(phi)."""
    return 0.5 * dphi_dx**2 - v_total(phi, p)


def bogomilnyi_bound(phi_0, phi_C, bracket, topological_Q=0.0):
    """Lower bound |Q| + (phi_0 - phi_C)^2 * bracket / 2 on the Euclidean Lagrangian."""
    return abs(topological_Q) + 0.5 * (phi_0 - phi_C) ** 2 * bracket
