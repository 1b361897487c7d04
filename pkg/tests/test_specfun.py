"""Special-function accuracy against closed forms and series oracles."""

import math

import numpy as np
import pytest

from lorentzft.specfun import DomainError, Order, bessel_j, bessel_k, bessel_n, gamma_fn

from series_reference import (
    besselj_series,
    besselk0_series,
    besselk1_series,
    bessely0_series,
    bessely1_series,
    gamma_spouge,
)

HALF = Order(1)          # nu = 1/2
MINUS_HALF = Order(-1)   # nu = -1/2
ZERO = Order(0)


def j_half_closed(x):
    return math.sqrt(2.0 / (math.pi * x)) * math.sin(x)


def n_half_closed(x):
    return -math.sqrt(2.0 / (math.pi * x)) * math.cos(x)


def k_half_closed(x):
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)


class TestOrder:
    def test_constructors(self):
        assert Order.from_nu(0.5).twice_nu == 1
        assert Order.from_nu(3).twice_nu == 6
        assert Order(21).nu == 10.5
        assert Order(4).is_integer and not Order(3).is_integer
        assert str(Order(3)) == "3/2" and str(Order(4)) == "2"

    @pytest.mark.parametrize("bad", [-2, 22, 100])
    def test_out_of_range(self, bad):
        with pytest.raises(DomainError):
            Order(bad)

    def test_not_half_integer(self):
        with pytest.raises(DomainError):
            Order.from_nu(0.3)
        with pytest.raises(DomainError):
            Order(1.5)


class TestExamples:
    def test_j0_at_zero(self):
        assert bessel_j(ZERO, 0.0) == 1.0

    def test_j_half_at_pi(self):
        # closed form gives sqrt(2/pi^2) sin(pi) = 0
        assert abs(bessel_j(HALF, math.pi) - j_half_closed(math.pi)) < 1e-15

    def test_j0_at_one_series(self):
        ref = besselj_series(0, 1.0)
        assert abs(bessel_j(ZERO, 1.0) - ref) <= 1e-12 * abs(ref)

    def test_n_half_values(self):
        assert abs(bessel_n(HALF, math.pi / 2) - n_half_closed(math.pi / 2)) < 1e-15
        ref = math.sqrt(2.0) / math.pi     # -sqrt(2/pi^2) cos(pi)
        assert abs(bessel_n(HALF, math.pi) - ref) <= 1e-13 * ref

    def test_n0_log_divergence(self):
        # N_0(x) ~ (2/pi)(ln(x/2) + gamma) for x -> 0+
        gamma_e = 0.5772156649015329
        for x in (1e-3, 1e-4, 1e-5):
            asym = 2.0 / math.pi * (math.log(x / 2.0) + gamma_e)
            assert bessel_n(ZERO, x) < -1.0
            assert abs(bessel_n(ZERO, x) / asym - 1.0) < 1e-6

    def test_k_half_values(self):
        assert abs(bessel_k(HALF, 1.0) - k_half_closed(1.0)) <= 1e-13 * k_half_closed(1.0)
        assert abs(bessel_k(HALF, 2.0) - math.sqrt(math.pi / 4.0) * math.exp(-2.0)) \
            <= 1e-13 * k_half_closed(2.0)

    def test_k0_decay(self):
        val = bessel_k(ZERO, 20.0)
        assert 0.0 < val <= math.exp(-20.0)

    def test_gamma_exact_points(self):
        assert gamma_fn(1.0) == 1.0
        assert abs(gamma_fn(0.5) - math.sqrt(math.pi)) <= 1e-15 * math.sqrt(math.pi)
        assert abs(gamma_fn(4.0) - 6.0) <= 1e-14


class TestDomainErrors:
    def test_negative_argument(self):
        for fn in (bessel_j, bessel_n, bessel_k):
            with pytest.raises(DomainError):
                fn(ZERO, -1.0)

    def test_zero_argument(self):
        with pytest.raises(DomainError):
            bessel_n(ZERO, 0.0)
        with pytest.raises(DomainError):
            bessel_k(ZERO, 0.0)
        with pytest.raises(DomainError):
            bessel_j(MINUS_HALF, 0.0)

    def test_gamma_nonpositive(self):
        with pytest.raises(DomainError):
            gamma_fn(0.0)
        with pytest.raises(DomainError):
            gamma_fn(-2.5)

    def test_array_domain_check(self):
        with pytest.raises(DomainError):
            bessel_k(ZERO, np.array([1.0, -0.5]))


GRID = np.linspace(0.1, 30.0, 113)


class TestHalfIntegerReductions:
    """|Z_{1/2} - closed form| <= 1e-12 |closed| + 1e-15 pointwise."""

    def test_j_half(self):
        got = bessel_j(HALF, GRID)
        ref = np.sqrt(2.0 / (np.pi * GRID)) * np.sin(GRID)
        assert np.all(np.abs(got - ref) <= 1e-12 * np.abs(ref) + 1e-15)

    def test_j_minus_half(self):
        got = bessel_j(MINUS_HALF, GRID)
        ref = np.sqrt(2.0 / (np.pi * GRID)) * np.cos(GRID)
        assert np.all(np.abs(got - ref) <= 1e-12 * np.abs(ref) + 1e-14)

    def test_n_half(self):
        got = bessel_n(HALF, GRID)
        ref = -np.sqrt(2.0 / (np.pi * GRID)) * np.cos(GRID)
        assert np.all(np.abs(got - ref) <= 1e-12 * np.abs(ref) + 1e-15)

    def test_k_half(self):
        got = bessel_k(HALF, GRID)
        ref = np.sqrt(np.pi / (2.0 * GRID)) * np.exp(-GRID)
        assert np.all(np.abs(got - ref) <= 1e-12 * np.abs(ref) + 1e-300)


class TestRecurrences:
    """Three-term recurrences to 1e-9 relative (scale of the larger side)."""

    XS = np.linspace(0.5, 30.0, 60)

    @pytest.mark.parametrize("twice_nu", range(1, 20))
    def test_jn_recurrence(self, twice_nu):
        lo, mid, hi = Order(twice_nu - 2), Order(twice_nu), Order(twice_nu + 2)
        for fn in (bessel_j, bessel_n):
            lhs = fn(lo, self.XS) + fn(hi, self.XS)
            rhs = 2.0 * mid.nu / self.XS * fn(mid, self.XS)
            scale = np.maximum.reduce([np.abs(lhs), np.abs(rhs), np.full_like(rhs, 1e-280)])
            assert np.all(np.abs(lhs - rhs) <= 1e-9 * scale)

    @pytest.mark.parametrize("twice_nu", range(1, 20))
    def test_k_recurrence(self, twice_nu):
        lo, mid, hi = Order(twice_nu - 2), Order(twice_nu), Order(twice_nu + 2)
        lhs = bessel_k(hi, self.XS) - bessel_k(lo, self.XS)
        rhs = 2.0 * mid.nu / self.XS * bessel_k(mid, self.XS)
        scale = np.maximum(np.abs(lhs), np.abs(rhs))
        assert np.all(np.abs(lhs - rhs) <= 1e-9 * scale)


class TestWronskian:
    """J_nu N_nu' - J_nu' N_nu = 2/(pi x), derivatives via
    Z_nu'(x) = (nu/x) Z_nu(x) - Z_{nu+1}(x)."""

    @pytest.mark.parametrize("twice_nu", range(-1, 20))
    def test_wronskian(self, twice_nu):
        xs = np.linspace(0.5, 30.0, 40)
        nu = Order(twice_nu)
        nu1 = Order(twice_nu + 2)
        j, j1 = bessel_j(nu, xs), bessel_j(nu1, xs)
        n, n1 = bessel_n(nu, xs), bessel_n(nu1, xs)
        jp = nu.nu / xs * j - j1
        np_ = nu.nu / xs * n - n1
        lhs = j * np_ - jp * n
        rhs = 2.0 / (np.pi * xs)
        assert np.all(np.abs(lhs - rhs) <= 1e-9 * rhs)


class TestSeriesOracles:
    """Integer-order values against the ascending-series references."""

    XS_J = np.linspace(0.25, 50.0, 29)
    XS_LOG = np.geomspace(2e-3, 50.0, 29)

    @pytest.mark.parametrize("n", [0, 1, 5])
    def test_j_series(self, n):
        order = Order(2 * n)
        for x in self.XS_J:
            ref = besselj_series(n, float(x))
            assert abs(bessel_j(order, float(x)) - ref) <= 1e-10 * (abs(ref) + 1e-3)

    def test_y0_series(self):
        for x in self.XS_LOG:
            ref = bessely0_series(float(x))
            assert abs(bessel_n(ZERO, float(x)) - ref) <= 1e-10 * (abs(ref) + 1e-3)

    def test_y1_series(self):
        for x in self.XS_LOG:
            ref = bessely1_series(float(x))
            assert abs(bessel_n(Order(2), float(x)) - ref) <= 1e-10 * (abs(ref) + 1e-3)

    def test_k0_series(self):
        for x in self.XS_LOG:
            ref = besselk0_series(float(x))
            assert abs(bessel_k(ZERO, float(x)) - ref) <= 1e-10 * abs(ref)

    def test_k1_series(self):
        for x in self.XS_LOG:
            ref = besselk1_series(float(x))
            assert abs(bessel_k(Order(2), float(x)) - ref) <= 1e-10 * abs(ref)

    def test_gamma_spouge(self):
        for x in np.geomspace(0.05, 30.0, 41):
            ref = gamma_spouge(float(x))
            assert abs(gamma_fn(float(x)) - ref) <= 1e-12 * abs(ref)


class TestPositivity:
    def test_k_positive(self):
        xs = np.geomspace(1e-3, 50.0, 200)
        for twice_nu in range(-1, 22):
            assert np.all(bessel_k(Order(twice_nu), xs) > 0.0)
