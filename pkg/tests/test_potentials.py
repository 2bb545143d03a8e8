"""Regime potentials: frozen-value examples, derivatives, schedule."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nucleosim.errors import PoleError, ValidationError
from nucleosim.potentials import ModelParams, RegimeTag, dv, regime_at, \
    v1, v2, v3, v_brane, v_effective, v_total

TWO_PI = 2.0 * math.pi

# m = m_p is not a valid ModelParams (strict m < m_p), so spec cases
# quoted at m = m_p = 1 run at m_p = 2 where the cosine term vanishes
# anyway, or at m = 1 - 1e-9 with the oracle value recomputed there.
P_COS_FREE = ModelParams(m_p=2.0, m=1.0)
P_NEAR_UNIT = ModelParams(m_p=1.0, m=1.0 - 1e-9)


class TestV1:
    def test_zero_at_origin(self):
        assert v1(0.0, ModelParams(m=1e-9)) == 0.0

    def test_two_pi_pure_tilt(self):
        # cosine term vanishes at 2*pi; (1/2)(2*pi)^2 remains
        assert v1(TWO_PI, P_COS_FREE) == pytest.approx(19.739208802178716,
                                                       rel=1e-12)

    def test_sine_gordon_peak_limit(self):
        # m -> 0+: pure cosine well peaks at (m_p^2/2) * 2 = 1
        assert v1(math.pi, ModelParams(m=1e-9)) == pytest.approx(1.0,
                                                                 rel=1e-12)

    @given(st.floats(-50, 50), st.floats(0.01, 0.9), st.floats(-5, 5))
    def test_nonnegative(self, phi, m, phi_star):
        p = ModelParams(m=m, phi_star=phi_star)
        assert v1(phi, p) >= 0.0
        assert v3(phi, p) >= 0.0

    @given(st.floats(-20, 20))
    def test_periodic_plus_tilt_identity(self, phi):
        p = ModelParams(m=0.3, phi_star=0.7)
        lhs = v1(phi + TWO_PI, p) - v1(phi, p)
        rhs = 0.5 * p.m ** 2 * ((phi + TWO_PI - p.phi_star) ** 2
                                - (phi - p.phi_star) ** 2)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-12)


class TestVTotal:
    def test_zero(self):
        assert v_total(0.0, ModelParams(m=1e-9)) == 0.0

    def test_additive_constant(self):
        assert v_total(0.0, ModelParams(m=1e-9, rho_init=0.5)) == 0.5

    def test_two_pi_with_rho(self):
        p = ModelParams(m_p=2.0, m=1.0, rho_init=0.1)
        assert v_total(TWO_PI, p) == pytest.approx(19.839208802178716,
                                                   rel=1e-12)


class TestVBrane:
    def test_double_vacuum(self):
        p = ModelParams(m=1e-9)
        assert v_brane(0.0, p.m_p, p) == pytest.approx(0.0, abs=1e-20)

    def test_frozen_radial_direction(self):
        p = ModelParams(m=0.3, phi_star=0.4)
        for phi in (-2.0, 0.3, 5.5):
            assert v_brane(phi, 0.0, p) == pytest.approx(
                0.25 * p.m_p ** 4 + v1(phi, p), rel=1e-14)

    def test_coupled_point(self):
        # oracle value at m = 1 - 1e-9 (spec quotes 1.9597 at m = 1, which
        # drops the 1/2 on the cosine term; direct arithmetic gives 1.7298)
        p = ModelParams(m_p=1.0, m=1.0 - 1e-9, lambda_coupling=2.0)
        assert v_brane(1.0, 1.0, p) == pytest.approx(1.72984884606593,
                                                     rel=1e-12)


class TestV2:
    def test_zero(self):
        assert v2(0.0, ModelParams()) == 0.0

    def test_reduces_to_v3_at_zero_coefficient(self):
        p = ModelParams(a_coeff=0.0, m=0.4)
        for phi in np.linspace(-8, 8, 41):
            assert v2(phi, p) == v3(phi, p)

    def test_quarter(self):
        assert v2(1.0, ModelParams(m_p=2.0, m=1.0, a_coeff=1.0)) == \
            pytest.approx(0.25, rel=1e-15)

    def test_pole(self):
        with pytest.raises(PoleError):
            v2(-2.0, ModelParams(a_coeff=1.0))
        with pytest.raises(PoleError):
            v2(-1.0, ModelParams(a_coeff=1.0))

    def test_approaches_v3_with_bound(self):
        m = 0.4
        for a in (1e-3, 1e-2, 1e-1):
            p = ModelParams(a_coeff=a, m=m)
            phis = np.linspace(0.0, 4.0, 201)
            bound = m ** 2 * phis ** 5 * a / (2.0 * (1.0 + a * phis ** 3))
            diff = np.abs(np.asarray(v2(phis, p)) - np.asarray(v3(phis, p)))
            assert np.all(diff <= bound * (1.0 + 1e-12) + 1e-15)


class TestDerivative:
    def test_stationary_origin(self):
        assert dv(RegimeTag.REGIME1, 0.0, ModelParams()) == 0.0

    def test_regime3_linear(self):
        assert dv(RegimeTag.REGIME3, 2.0, P_COS_FREE) == pytest.approx(
            2.0, rel=1e-15)

    @pytest.mark.parametrize("regime,p,lo,hi", [
        (RegimeTag.REGIME1, ModelParams(m=0.3, phi_star=0.5),
         -4 * math.pi, 4 * math.pi),
        (RegimeTag.REGIME2, ModelParams(m=0.3, a_coeff=0.0),
         -4 * math.pi, 4 * math.pi),
        (RegimeTag.REGIME2, ModelParams(m=0.3, a_coeff=1.0),
         -0.9, 4 * math.pi),
        (RegimeTag.REGIME3, ModelParams(m=0.3), -4 * math.pi, 4 * math.pi),
    ])
    def test_matches_finite_differences(self, regime, p, lo, hi):
        fn = {RegimeTag.REGIME1: v1, RegimeTag.REGIME2: v2,
              RegimeTag.REGIME3: v3}[regime]
        h = 1e-5
        for phi in np.linspace(lo, hi, 1000):
            fd = (fn(phi + h, p) - fn(phi - h, p)) / (2.0 * h)
            an = dv(regime, phi, p)
            assert an == pytest.approx(fd, rel=1e-6, abs=1e-6)

    def test_pole(self):
        with pytest.raises(PoleError):
            dv(RegimeTag.REGIME2, -2.0, ModelParams(a_coeff=1.0))


class TestSchedule:
    def test_examples(self):
        p = ModelParams()
        assert regime_at(0.0, p) == RegimeTag.REGIME1
        assert regime_at(p.t_p, p) == RegimeTag.REGIME1
        assert regime_at(p.t_p + 5 * p.delta_t, p) == RegimeTag.REGIME2
        assert regime_at(p.t_p + 10 * p.delta_t, p) == RegimeTag.REGIME3

    @given(st.floats(0, 100), st.floats(0, 100))
    def test_monotone(self, t1, t2):
        p = ModelParams()
        lo, hi = min(t1, t2), max(t1, t2)
        assert regime_at(lo, p) <= regime_at(hi, p)

    def test_tag_order(self):
        assert RegimeTag.REGIME1 < RegimeTag.REGIME2 < RegimeTag.REGIME3


class TestEffective:
    def test_zero(self):
        assert v_effective(0.0, 0.0, ModelParams(m=1e-9)) == 0.0

    def test_late_harmonic(self):
        p = P_COS_FREE
        assert v_effective(1.0, 100.0, p) == pytest.approx(0.5, rel=1e-15)

    def test_branch_values_across_switch(self):
        p = ModelParams(m=0.3, rho_init=0.05, drive_amp=1e-3, a_coeff=1.0)
        before = v_effective(1.0, p.t_p, p)
        after = v_effective(1.0, p.t_p + p.delta_t, p)
        assert before == pytest.approx(
            float(v_total(1.0, p)) + p.drive_amp * 1.0, rel=1e-14)
        assert after == pytest.approx(float(v2(1.0, p)), rel=1e-14)
        # the switch is deliberately discontinuous
        assert before != after


class TestModelParams:
    def test_defaults_valid(self):
        p = ModelParams()
        assert p.g_newton * p.m_p ** 2 == 1.0

    @pytest.mark.parametrize("kwargs", [
        {"m_p": 0.0}, {"m": 0.0}, {"m": 2.0},
        {"m": 1.0},  # m == m_p violates the strict inequality
        {"a_coeff": -1.0}, {"rho_init": -0.1}, {"t_p": 0.0},
        {"delta_t": 0.0}, {"k_mult": 0.0}, {"drive_amp": 0.02},
        {"drive_amp": -0.02},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            ModelParams(**kwargs)

    def test_drive_cap_scales_with_m_p(self):
        ModelParams(m_p=2.0, drive_amp=0.019)  # cap is 0.01*4/2 = 0.02
        with pytest.raises(ValidationError):
            ModelParams(m_p=2.0, drive_amp=0.021)

    @settings(max_examples=200)
    @given(st.floats(0.1, 100))
    def test_g_newton_inverse_square(self, m_p):
        p = ModelParams(m_p=m_p, m=0.05 * m_p)
        assert p.g_newton * p.m_p ** 2 == pytest.approx(1.0, abs=4e-16)
