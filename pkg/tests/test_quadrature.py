"""Quadrature engine: finite integrals, damped semi-infinite integrals,
extrapolation to zero damping."""

import math

import numpy as np
import pytest

from lorentzft.quadrature import (
    QuadConfig,
    QuadResult,
    extrapolate_to_zero,
    integrate_finite,
    integrate_semiinfinite_damped,
)

CFG = QuadConfig()


class TestConfigValidation:
    def test_defaults(self):
        cfg = QuadConfig()
        assert cfg.epsilon_schedule == tuple(0.1 * 2.0 ** (-j) for j in range(6))
        assert cfg.extrapolation_order == 3

    def test_bad_tolerances(self):
        with pytest.raises(ValueError):
            QuadConfig(abs_tol=0.0)
        with pytest.raises(ValueError):
            QuadConfig(rel_tol=-1.0)

    def test_bad_schedule(self):
        with pytest.raises(ValueError):
            QuadConfig(epsilon_schedule=(0.1, 0.2))
        with pytest.raises(ValueError):
            QuadConfig(epsilon_schedule=(0.1, -0.05))
        with pytest.raises(ValueError):
            QuadConfig(epsilon_schedule=())

    def test_bad_order(self):
        with pytest.raises(ValueError):
            QuadConfig(epsilon_schedule=(0.1, 0.05), extrapolation_order=2)

    def test_result_invariant(self):
        with pytest.raises(ValueError):
            QuadResult(1.0, -1e-3, True, 10)


class TestFinite:
    def test_constant(self):
        res = integrate_finite(lambda x: 1.0, 0.0, 1.0, CFG)
        assert res.converged
        assert abs(res.value - 1.0) < 1e-12

    def test_x_sin_two_pi_x(self):
        # integration by parts: int_0^1 x sin(2 pi x) dx = -1/(2 pi)
        res = integrate_finite(lambda x: x * math.sin(2 * math.pi * x), 0.0, 1.0, CFG)
        assert res.converged
        assert abs(res.value + 1.0 / (2 * math.pi)) < 1e-11

    def test_log_endpoint_singularity(self):
        res = integrate_finite(math.log, 0.0, 1.0, CFG)
        assert res.converged
        assert abs(res.value + 1.0) < 1e-9

    def test_complex_integrand(self):
        res = integrate_finite(lambda x: np.exp(1j * x), 0.0, math.pi, CFG)
        assert abs(res.value - (math.sin(math.pi) + 1j * (1 - math.cos(math.pi)))) < 1e-10

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            integrate_finite(lambda x: x, 1.0, 0.0, CFG)


class TestDampedSemiInfinite:
    def test_absolutely_convergent(self):
        # int_0^inf x exp(-x^2) dx = 1/2, damping is irrelevant
        res = integrate_semiinfinite_damped(lambda x: x * np.exp(-x * x), CFG,
                                            envelope=lambda x: np.exp(-0.5 * np.asarray(x) ** 2))
        assert res.converged
        assert abs(res.value - 0.5) < 1e-8
        assert abs(res.value - 0.5) <= res.error_estimate

    def test_fresnel_type(self):
        # int_0^inf x exp(i x^2) dx -> i/2 under the damped prescription
        res = integrate_semiinfinite_damped(lambda x: x * np.exp(1j * x * x), CFG,
                                            quad_phase=1.0)
        assert abs(res.value - 0.5j) < 1e-7

    def test_abel_sin(self):
        # Abel-regularized int_0^inf sin = 1; accuracy limited by the
        # epsilon-series of the endpoint contribution under the default schedule
        res = integrate_semiinfinite_damped(np.sin, CFG, osc_scale=1.0, quad_phase=0.0)
        assert abs(res.value - 1.0) < 2e-4
        assert res.error_estimate >= abs(res.value - 1.0)

    def test_support_radius(self):
        res = integrate_semiinfinite_damped(
            lambda x: np.where(np.asarray(x) < 2.0, np.asarray(x), 0.0), CFG,
            support_radius=2.0, quad_phase=0.0)
        assert res.converged
        assert abs(res.value - 2.0) < 1e-6
        assert abs(res.value - 2.0) <= res.error_estimate

    def test_scalar_callable_fallback(self):
        res = integrate_semiinfinite_damped(lambda x: x * math.exp(-x * x), CFG,
                                            envelope=lambda x: np.exp(-0.5 * np.asarray(x) ** 2))
        assert abs(res.value - 0.5) < 1e-8

    def test_zero_integrand(self):
        res = integrate_semiinfinite_damped(lambda x: np.zeros_like(np.asarray(x)), CFG)
        assert res.converged
        assert res.value == 0.0


class TestDampedInvariants:
    def test_linearity(self):
        f = lambda x: np.exp(-np.asarray(x) ** 2)
        g = lambda x: np.asarray(x) * np.exp(-np.asarray(x) ** 2)
        a, b = 2.0, -3.0
        r_f = integrate_semiinfinite_damped(f, CFG)
        r_g = integrate_semiinfinite_damped(g, CFG)
        r_c = integrate_semiinfinite_damped(lambda x: a * f(x) + b * g(x), CFG)
        combined_err = abs(a) * r_f.error_estimate + abs(b) * r_g.error_estimate \
            + r_c.error_estimate + 1e-12
        assert abs(r_c.value - (a * r_f.value + b * r_g.value)) <= combined_err

    def test_damping_monotonicity_nonnegative(self):
        # for f >= 0 the damped integral decreases with the damping strength
        f = lambda x: 1.0 / (1.0 + np.asarray(x) ** 2)
        vals = []
        for eps in (0.1, 0.05, 0.025):
            cfg = QuadConfig(epsilon_schedule=(eps,), extrapolation_order=0)
            vals.append(integrate_semiinfinite_damped(f, cfg, quad_phase=0.0).value.real)
        assert vals[0] <= vals[1] <= vals[2]

    def test_matches_finite_for_absolutely_convergent(self):
        f = lambda x: np.exp(-np.asarray(x, dtype=float))
        damped = integrate_semiinfinite_damped(f, CFG, quad_phase=0.0,
                                               envelope=lambda x: np.exp(-0.9 * np.asarray(x)))
        finite = integrate_finite(lambda x: math.exp(-x), 0.0, 60.0, CFG)
        assert abs(damped.value - finite.value) <= \
            10 * (damped.error_estimate + finite.error_estimate) + 1e-9


class TestExtrapolation:
    def test_affine_exact(self):
        samples = [(e, 3.0 + 2.0 * e) for e in (0.1, 0.05, 0.025)]
        value, resid = extrapolate_to_zero(samples, 1)
        assert abs(value - 3.0) < 1e-14

    def test_rational_sample(self):
        # v(eps) = 1/(1+eps); the quadratic through eps = .1, .05, .025
        # extrapolates to 0.9998944145285614 (off the limit by 1.0558e-4)
        samples = [(e, 1.0 / (1.0 + e)) for e in (0.1, 0.05, 0.025)]
        value, _ = extrapolate_to_zero(samples, 2)
        assert abs(value - 0.9998944145285614) < 1e-13
        assert abs(value - 1.0) < 1.1e-4

    def test_constant_samples(self):
        samples = [(e, 7.25) for e in (0.1, 0.05, 0.025, 0.0125)]
        value, resid = extrapolate_to_zero(samples, 2)
        assert value == 7.25
        assert resid == 0.0

    def test_duplicate_eps_rejected(self):
        with pytest.raises(ValueError):
            extrapolate_to_zero([(0.1, 1.0), (0.1, 2.0)], 1)

    def test_insufficient_samples(self):
        with pytest.raises(ValueError):
            extrapolate_to_zero([(0.1, 1.0), (0.05, 1.1)], 2)

    def test_uses_smallest_eps(self):
        # order 1 through the two smallest samples: line through (.025, 1.025),
        # (.0125, 1.0125) hits 1 at eps = 0
        samples = [(0.1, 5.0), (0.025, 1.025), (0.0125, 1.0125)]
        value, _ = extrapolate_to_zero(samples, 1)
        assert abs(value - 1.0) < 1e-13
