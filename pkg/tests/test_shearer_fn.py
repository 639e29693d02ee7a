"""Tests for the occupancy function f, its derivative, and its identities.

High-precision reference values were frozen from 40-digit mpmath evaluation
of the closed form; mpmath is also consulted directly where convenient.
"""

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shearer.errors import DomainError
from shearer.shearer_fn import (
    SERIES_WINDOW,
    f_rational_floor,
    ode_residual,
    shearer_f,
    shearer_f_prime,
)

# frozen 40-digit references
F_OF_2 = 0.3862943611198906  # 2 ln 2 - 1
F_OF_3 = 0.3239592165010823  # (3 ln 3 - 2) / 4
F_OF_HALF = 0.6137056388801094
FPRIME_OF_2 = -0.0794415416798359


def mp_f(x):
    x = mp.mpf(x)
    if x == 0:
        return mp.mpf(1)
    if x == 1:
        return mp.mpf(1) / 2
    return ((1 - x) + x * mp.log(x)) / (x - 1) ** 2


class TestValues:
    def test_exact_endpoints(self):
        assert shearer_f(0) == 1.0
        assert shearer_f(1) == 0.5

    def test_closed_form_points(self):
        assert shearer_f(2) == pytest.approx(F_OF_2, abs=1e-15)
        assert shearer_f(3) == pytest.approx(F_OF_3, abs=1e-15)
        assert shearer_f(0.5) == pytest.approx(F_OF_HALF, abs=1e-15)

    def test_against_mpmath_grid(self):
        mp.mp.dps = 40
        for x in [1e-6, 1e-3, 0.1, 0.5, 0.9, 0.999, 1.0004, 1.01, 1.5, 7.0, 123.0, 1e6]:
            want = float(mp_f(x))
            assert shearer_f(x) == pytest.approx(want, rel=1e-12), x

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            shearer_f(-0.1)
        with pytest.raises(DomainError):
            shearer_f(float("nan"))
        with pytest.raises(DomainError):
            shearer_f(float("inf"))
        with pytest.raises(DomainError):
            shearer_f_prime(0)
        with pytest.raises(DomainError):
            shearer_f_prime(-2)


class TestDerivative:
    def test_at_one_series(self):
        assert shearer_f_prime(1) == pytest.approx(-1.0 / 6.0, abs=1e-15)

    def test_at_two_ode_form(self):
        assert shearer_f_prime(2) == pytest.approx(FPRIME_OF_2, abs=1e-12)

    def test_against_mpmath(self):
        # closed-form derivative: f'(x) = (2(x-1) - (x+1) ln x) / (x-1)^3
        mp.mp.dps = 40

        def mp_fprime(x):
            x = mp.mpf(x)
            if x == 1:
                return -mp.mpf(1) / 6
            return (2 * (x - 1) - mp.log(x) * (x + 1)) / (x - 1) ** 3

        for x in [0.01, 0.3, 0.9995, 1.0, 1.0008, 3.0, 50.0, 1e4]:
            want = float(mp_fprime(x))
            assert shearer_f_prime(x) == pytest.approx(want, rel=1e-9, abs=1e-12), x

    def test_large_argument_damping(self):
        x = 1e6
        fp = shearer_f_prime(x)
        assert fp < 0
        assert abs(x * fp) < 1.0


class TestIdentities:
    def log_grid(self):
        return [10 ** (-3 + 6 * i / 49) for i in range(50)]

    def test_ode_residual_log_grid(self):
        for x in self.log_grid():
            assert abs(ode_residual(x)) <= 1e-8, x

    def test_reciprocal_identity(self):
        for x in self.log_grid():
            assert abs(shearer_f(x) + shearer_f(1.0 / x) - 1.0) <= 1e-11, x

    def test_x_fprime_bounded(self):
        for x in self.log_grid() + [1e5, 1e6]:
            assert abs(x * shearer_f_prime(x)) < 1.0, x

    def test_monotone_decreasing_on_log_grid(self):
        xs = [0.0] + self.log_grid() + [1e6]
        values = [shearer_f(x) for x in xs]
        for a, b in zip(values, values[1:]):
            assert a > b

    def test_convexity_second_differences(self):
        for x in self.log_grid():
            h = min(0.5 * x, 1e-3 * max(x, 1.0))
            second = shearer_f(x - h) - 2 * shearer_f(x) + shearer_f(x + h)
            assert second >= -1e-12, x

    def test_asymptotic_window(self):
        value = shearer_f(1e6) * 1e6 / math.log(1e6)
        assert 0.90 <= value <= 0.95
        assert value == pytest.approx(0.9276195139699720, rel=1e-12)

    def test_series_closed_form_agreement(self):
        # straddle the switch-over window on both sides
        tau = SERIES_WINDOW
        for t in [-2 * tau, -1.5 * tau, -1.01 * tau, 1.01 * tau, 1.5 * tau, 2 * tau]:
            x = 1.0 + t
            closed = ((1.0 - x) + x * math.log(x)) / (x - 1.0) ** 2
            assert shearer_f(x) == pytest.approx(closed, abs=1e-11)


@given(st.floats(min_value=1e-3, max_value=1e3))
@settings(max_examples=200, deadline=None)
def test_reciprocal_identity_hypothesis(x):
    assert abs(shearer_f(x) + shearer_f(1.0 / x) - 1.0) <= 1e-11


@given(
    st.floats(min_value=0.0, max_value=1e6),
    st.floats(min_value=1e-9, max_value=1e6),
)
@settings(max_examples=200, deadline=None)
def test_strictly_decreasing_hypothesis(a, gap):
    b = a + gap
    assert shearer_f(a) > shearer_f(b)


class TestRationalFloor:
    def test_zero_is_exact(self):
        assert f_rational_floor(Fraction(0)) == 1

    def test_floor_is_lower_bound(self):
        mp.mp.dps = 40
        for x in [0.5, 1.0, 2.0, 3.0, 17.5]:
            floor = f_rational_floor(x)
            assert isinstance(floor, Fraction)
            assert mp.mpf(floor.numerator) / floor.denominator <= mp_f(x)
            assert float(floor) == pytest.approx(shearer_f(x), abs=1e-10)
