import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from falsevac.errors import DomainError, NoDoubleWellError
from falsevac.potential import (
    ExtendedSGParams,
    PotentialParams,
    bogomilnyi_bound,
    bracket_a_unsimplified,
    bracket_terms,
    chaotic_phi_of_t,
    chaotic_potential,
    extended_sg,
    find_vacua,
    guth_bound,
    lagrangian_density,
    phi_star_formula,
    v1,
    v1_d1,
    v1_d2,
    v_total,
)

DEFAULT = PotentialParams()


def mp_v1(phi, m="0.441", cos_coeff="0.5"):
    # 30-digit reference evaluation
    with mp.workdps(30):
        m = mpf(m)
        ps = mpf("0.99") * mp.pi
        return mpf(cos_coeff) * (1 - mp.cos(phi)) + m**2 / 2 * (phi - ps) ** 2


def test_v1_at_phi_star_matches_high_precision():
    assert v1(DEFAULT.phi_star) == pytest.approx(float(mp_v1(mpf("0.99") * mp.pi)), rel=1e-14)
    assert v1(DEFAULT.phi_star) == pytest.approx(0.99975, abs=1e-5)


def test_v1_at_origin():
    assert v1(0.0) == pytest.approx(float(mp_v1(0)), rel=1e-14)
    assert v1(0.0) == pytest.approx(0.940627, abs=1e-6)


def test_v1_vanishes_when_both_terms_do():
    assert v1(0.0, PotentialParams(phi_star=0.0)) == 0.0


def test_v_total_offset():
    p = PotentialParams(rho_init=1.0)
    assert v_total(0.0, PotentialParams()) == v1(0.0)
    assert v_total(0.0, p) == pytest.approx(1.0 + float(mp_v1(0)), rel=1e-14)
    xs = np.linspace(-3, 9, 50)
    np.testing.assert_allclose(v_total(xs, p) - v1(xs, p), 1.0, rtol=0, atol=1e-14)


def test_derivative_values():
    assert v1_d1(DEFAULT.phi_star) == pytest.approx(0.5 * math.sin(0.99 * math.pi), rel=1e-14)
    assert v1_d1(DEFAULT.phi_star) == pytest.approx(0.015705, abs=1e-6)
    assert v1_d2(math.pi) == pytest.approx(-0.305519, abs=1e-12)
    assert v1_d1(0.0, PotentialParams(phi_star=0.0)) == 0.0


def test_derivatives_against_central_differences():
    xs = np.linspace(-2 * math.pi, 4 * math.pi, 10_000)
    h = 1e-6
    fd1 = (v1(xs + h) - v1(xs - h)) / (2 * h)
    fd2 = (v1_d1(xs + h) - v1_d1(xs - h)) / (2 * h)
    assert np.max(np.abs(v1_d1(xs) - fd1)) < 1e-7
    assert np.max(np.abs(v1_d2(xs) - fd2)) < 1e-7


def test_chaotic_potential_and_trajectory():
    assert chaotic_potential(0.0, 3.0) == 0.0
    assert chaotic_potential(1.0, 1.0) == 0.5
    assert chaotic_potential(2.0, 0.441) == pytest.approx(0.388962, abs=1e-12)
    assert chaotic_phi_of_t(0.0, 3.1, 0.441) == 3.1
    t_unit = math.sqrt(12 * math.pi) / 0.441
    assert chaotic_phi_of_t(t_unit, 3.1, 0.441) == pytest.approx(2.1, abs=1e-14)
    assert chaotic_phi_of_t(1.0, 3.1, 0.441) == pytest.approx(3.0281754307502708, rel=1e-14)
    with pytest.raises(DomainError):
        chaotic_phi_of_t(-1.0, 3.1, 0.441)


def test_guth_bound():
    assert guth_bound() == pytest.approx(3.0902, abs=1e-4)
    assert guth_bound() > 3
    assert guth_bound() ** 2 == pytest.approx(9.5493, abs=1e-4)


def test_phi_star_formula():
    assert phi_star_formula(0.441) == pytest.approx(0.7443, abs=1e-4)
    assert phi_star_formula(math.sqrt(3 / (16 * math.pi))) == pytest.approx(1.0, rel=1e-14)
    assert phi_star_formula(4 * 0.3) == pytest.approx(phi_star_formula(0.3) / 2, rel=1e-14)
    with pytest.raises(DomainError):
        phi_star_formula(0.0)


def _oracle_minima(p, lo=0.0, hi=2 * math.pi, step=1e-5):
    # independent route: fine scan plus scipy-free bisection on plain floats
    xs = np.arange(lo, hi + step, step)
    d = p.cos_coeff * np.sin(xs) + p.m**2 * (xs - p.phi_star)
    idx = np.nonzero(np.sign(d[:-1]) * np.sign(d[1:]) < 0)[0]
    roots = []
    for i in idx:
        a, b = xs[i], xs[i + 1]
        fa = p.cos_coeff * math.sin(a) + p.m**2 * (a - p.phi_star)
        for _ in range(200):
            c = 0.5 * (a + b)
            fc = p.cos_coeff * math.sin(c) + p.m**2 * (c - p.phi_star)
            if (fc < 0) == (fa < 0):
                a, fa = c, fc
            else:
                b = c
        roots.append(0.5 * (a + b))
    return roots


def test_find_vacua_defaults_agree_with_oracle():
    vs = find_vacua(DEFAULT)
    roots = _oracle_minima(DEFAULT)
    assert len(roots) == 3
    left, top, right = roots
    # left well is the deeper one at the defaults
    assert vs.phi_T == pytest.approx(left, abs=1e-9)
    assert vs.phi_barrier == pytest.approx(top, abs=1e-9)
    assert vs.phi_F == pytest.approx(right, abs=1e-9)
    assert vs.phi_T == pytest.approx(0.97795, abs=1e-5)
    assert vs.phi_F == pytest.approx(5.27915, abs=1e-5)


def test_find_vacua_invariants():
    vs = find_vacua(DEFAULT)
    for phi in (vs.phi_F, vs.phi_T, vs.phi_barrier):
        assert abs(v1_d1(phi)) < 1e-10
    assert v1_d2(vs.phi_F) > 0 and v1_d2(vs.phi_T) > 0 and v1_d2(vs.phi_barrier) < 0
    assert min(vs.phi_F, vs.phi_T) < vs.phi_barrier < max(vs.phi_F, vs.phi_T)
    assert v1(vs.phi_F) >= v1(vs.phi_T)
    assert vs.delta_E == pytest.approx(v1(vs.phi_F) - v1(vs.phi_T), rel=1e-14)
    assert vs.delta_E * vs.length_L == pytest.approx(1.0, rel=1e-15)
    assert not vs.degenerate


def test_find_vacua_alternate_cosine_coefficient():
    p = PotentialParams(cos_coeff=0.5989)
    vs = find_vacua(p)
    roots = _oracle_minima(p)
    assert sorted([vs.phi_F, vs.phi_T]) == pytest.approx([roots[0], roots[-1]], abs=1e-9)


def test_find_vacua_no_double_well():
    with pytest.raises(NoDoubleWellError, match="no-double-well"):
        find_vacua(PotentialParams(m=10.0))
    assert len(_oracle_minima(PotentialParams(m=10.0))) == 1


def test_find_vacua_degenerate_symmetric_case():
    vs = find_vacua(PotentialParams(phi_star=math.pi))
    assert vs.degenerate
    assert vs.delta_E == 0.0
    assert math.isnan(vs.length_L)
    assert vs.phi_barrier == pytest.approx(math.pi, abs=1e-10)


def test_find_vacua_bad_interval():
    with pytest.raises(DomainError):
        find_vacua(DEFAULT, 2.0, 1.0)


@settings(max_examples=1000, deadline=None)
@given(st.floats(-20, 20, allow_nan=False))
def test_v1_symmetric_about_pi(u):
    p = PotentialParams(phi_star=math.pi)
    assert v1(math.pi + u, p) == pytest.approx(v1(math.pi - u, p), rel=1e-12, abs=1e-12)


def test_bracket_terms_values():
    bt = bracket_terms(DEFAULT, phi_F=0.5472, phi_T=5.457)
    assert bt.bracket_A == pytest.approx((1 + 0.441**2) / 2, rel=1e-15)
    assert bt.bracket_A == pytest.approx(0.5972, abs=1e-4)
    assert bt.bracket_B == pytest.approx(0.5472 * 5.457 / 6, rel=1e-15)
    assert bt.bracket_B == pytest.approx(0.4977, abs=1e-4)
    assert bt.gap_from_brackets == pytest.approx(0.0498, abs=1e-4)
    assert bt.bracket == bt.bracket_A - bt.bracket_B
    assert bt.gap_from_brackets == bt.bracket / 2
    assert bracket_terms(PotentialParams(m=1.0), phi_F=1.0, phi_T=1.0).bracket_A == 1.0


def test_bracket_terms_from_vacuum_solution():
    vs = find_vacua(DEFAULT)
    bt = bracket_terms(DEFAULT, vs)
    assert bt.bracket_B == pytest.approx(vs.phi_F * vs.phi_T / 6, rel=1e-15)


@settings(max_examples=1000, deadline=None)
@given(st.floats(0.01, 10))
def test_bracket_a_simplification(m):
    simplified = bracket_terms(PotentialParams(m=m), phi_F=0.0, phi_T=0.0).bracket_A
    assert abs(simplified - bracket_a_unsimplified(m)) < 1e-14 * max(1.0, simplified)


def test_extended_sg():
    q = ExtendedSGParams(c1=0.7, c2=0.3, phi_0=1.3)
    assert extended_sg(1.3, q) == 0.0
    # symbolic expansion as the oracle
    phi, c1, c2, p0 = sympy.symbols("phi c1 c2 phi0")
    expr = sympy.expand(c1 * (phi - p0) ** 2 - 4 * c2 * phi * p0 * (phi - p0) ** 2 + c2 * (phi**2 - p0**2) ** 2)
    at = expr.subs({c1: 0, c2: sympy.Rational(3, 10), p0: sympy.Rational(13, 10), phi: -sympy.Rational(13, 10)})
    assert extended_sg(-1.3, ExtendedSGParams(0.0, 0.3, 1.3)) == pytest.approx(float(at), rel=1e-14)
    assert float(at) == pytest.approx(16 * 0.3 * 1.3**4, rel=1e-14)
    xs = np.linspace(-3, 3, 11)
    np.testing.assert_allclose(extended_sg(xs, ExtendedSGParams(0.7, 0.0, 1.3)), 0.7 * (xs - 1.3) ** 2)


def test_lagrangian_density():
    assert lagrangian_density(0.0, 0.0, PotentialParams(phi_star=0.0)) == 0.0
    p = PotentialParams(phi_star=0.0, rho_init=1.0)
    assert lagrangian_density(0.0, 2.0, p) == 1.0
    # inside a kink plateau the gradient vanishes and the potential dominates
    phi_mid = 2 * math.pi * math.tanh(5)
    assert lagrangian_density(phi_mid, 0.0) == pytest.approx(-v1(phi_mid), rel=1e-15)


def test_bogomilnyi_bound():
    assert bogomilnyi_bound(1.0, 1.0, 0.3, 0.0) == 0.0
    assert bogomilnyi_bound(2.0, 1.0, 0.0995, 0.0) == pytest.approx(0.04975, rel=1e-14)
    assert bogomilnyi_bound(0.0, 0.0, 0.0, 3.0) == 3.0
    assert bogomilnyi_bound(0.0, 0.0, 0.0, -3.0) == 3.0


def test_params_validation():
    with pytest.raises(DomainError):
        PotentialParams(m=0.0)
    with pytest.raises(DomainError):
        PotentialParams(cos_coeff=-1.0)
    with pytest.raises(DomainError):
        PotentialParams(rho_init=-0.1)
    with pytest.raises(DomainError):
        ExtendedSGParams(c1=-1.0)
    assert DEFAULT.m < 1
