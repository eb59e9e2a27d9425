import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extgauss import quadrature as qd

PI = math.pi


class TestIntegrate:
    def test_constant(self):
        r = qd.integrate(lambda x: np.ones_like(x), 0.0, 1.0, 1e-12)
        assert r.value == pytest.approx(1.0, abs=1e-14)
        assert r.abs_error_estimate >= 0.0
        assert r.evaluations > 0

    def test_half_period_average(self):
        r = qd.integrate(lambda x: np.sin(PI * x) ** 2, 0.0, 1.0, 1e-12)
        assert r.value == pytest.approx(0.5, abs=1e-13)

    def test_gaussian_mass(self):
        r = qd.integrate(lambda x: np.exp(-PI * x * x), -6.0, 6.0, 1e-12)
        assert r.value == pytest.approx(1.0, abs=1e-10)

    def test_bad_interval_rejected(self):
        with pytest.raises(ValueError):
            qd.integrate(lambda x: x, 1.0, 0.0, 1e-8)

    def test_scalar_function_wrapped(self):
        r = qd.integrate(lambda x: 1.0 if x < 0.5 else 2.0, 0.0, 1.0, 1e-9)
        assert r.value == pytest.approx(1.5, abs=1e-9)

    def test_seeded_points_resolve_narrow_bump(self):
        w = 1e-5
        r = qd.integrate(
            lambda x: np.exp(-((x - 0.3) / w) ** 2),
            0.0,
            1.0,
            1e-14,
            points=[0.3 - 5 * w, 0.3 + 5 * w],
        )
        assert r.value == pytest.approx(w * math.sqrt(PI), rel=1e-9)

    def test_divergent_integrand_raises_with_best(self):
        with pytest.raises(qd.QuadratureError) as exc:
            qd.integrate(lambda x: 1.0 / np.abs(x - 0.3), 0.0, 1.0, 1e-10)
        assert isinstance(exc.value.best, qd.QuadResult)
        assert exc.value.best.evaluations > 0

    def test_conservative_estimates_on_closed_forms(self):
        # moments of the unit Gaussian: exact values by the recursion
        cases = [
            (lambda x: np.exp(-PI * x * x), 1.0),
            (lambda x: x * x * np.exp(-PI * x * x), 1.0 / (2.0 * PI)),
            (lambda x: x**4 * np.exp(-PI * x * x), 3.0 / (4.0 * PI * PI)),
            (lambda x: (1.0 + x + x**2) * np.exp(-PI * x * x), 1.0 + 1.0 / (2.0 * PI)),
        ]
        for f, exact in cases:
            r = qd.integrate(f, -7.0, 7.0, 1e-11)
            assert abs(r.value - exact) <= r.abs_error_estimate + 5e-14 * (1.0 + abs(exact))


class TestIntegrateLine:
    def test_gaussian(self):
        r = qd.integrate_line(lambda x: np.exp(-PI * x * x), 1e-10, 1.0)
        assert r.value == pytest.approx(1.0, abs=1e-10)

    def test_truncated_gaussian_half_mass(self):
        from extgauss.special_fns import truncated_gaussian

        r = qd.integrate_line(lambda x: truncated_gaussian(1.0, x), 1e-10, 1.0)
        assert r.value == pytest.approx(0.5, abs=1e-10)

    def test_odd_integrand_vanishes(self):
        r = qd.integrate_line(lambda x: x * np.exp(-PI * x * x), 1e-12, 1.0)
        assert abs(r.value) < 1e-12


class TestL1Distance:
    def test_identical_functions(self):
        f = lambda x: np.exp(-PI * x * x)
        r = qd.l1_distance(f, f, 1e-10, decay_scale=1.0)
        assert r.value == 0.0

    def test_sine_against_zero(self):
        r = qd.l1_distance(
            lambda x: np.sin(PI * x), lambda x: np.zeros_like(x), 1e-10, window=2.0
        )
        assert r.value == pytest.approx(8.0 / PI, abs=1e-9)

    def test_tail_added(self):
        f = lambda x: np.zeros_like(x)
        r = qd.l1_distance(f, f, 1e-10, window=1.0, tail=0.25, tail_error=1e-3)
        assert r.value == 0.25
        assert r.abs_error_estimate >= 1e-3


class TestHLambda:
    def test_methods_agree(self):
        sub = qd.h_lambda_profile(1.0, method="substituted")
        direct = qd.h_lambda_profile(1.0, method="direct")
        assert sub.method == "substituted"
        assert direct.method == "direct"
        assert sub.value == pytest.approx(direct.value, abs=1e-7)

    def test_limit_at_zero(self):
        assert abs(qd.H_lambda(1e-4) - 0.5) < 0.005

    def test_scaled_limit_at_infinity(self):
        assert abs(math.sqrt(1e4) * qd.H_lambda(1e4) - 0.5) < 0.005

    def test_positive(self):
        for lam in (0.1, 1.0, 10.0):
            assert qd.H_lambda(lam) > 0.0

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            qd.h_lambda_profile(1.0, method="mystery")


class TestIntegrate2D:
    def test_separable_gaussian(self):
        f = lambda t, u: np.exp(-PI * (t * t + u * u))
        r = qd.integrate_2d(f, ((-6.0, 6.0), (-6.0, 6.0)), 1e-9)
        assert r.value == pytest.approx(1.0, abs=1e-8)

    def test_quarter_mass(self):
        f = lambda t, u: np.exp(-PI * (t * t + u * u))
        r = qd.integrate_2d(f, ((0.0, 6.0), (0.0, 6.0)), 1e-9)
        assert r.value == pytest.approx(0.25, abs=1e-8)

    def test_requires_finite_rectangle(self):
        with pytest.raises(ValueError):
            qd.integrate_2d(lambda t, u: t * u, ((0.0, np.inf), (0.0, 1.0)), 1e-6)


@settings(max_examples=25, deadline=None)
@given(
    a=st.floats(min_value=-2.0, max_value=2.0),
    b=st.floats(min_value=-2.0, max_value=2.0),
)
def test_integrate_linearity(a, b):
    f = lambda x: np.exp(-PI * x * x)
    g = lambda x: x * x * np.exp(-PI * x * x)
    combo = qd.integrate(lambda x: a * f(x) + b * g(x), -6.0, 6.0, 1e-11).value
    parts = a * qd.integrate(f, -6.0, 6.0, 1e-11).value + b * qd.integrate(
        g, -6.0, 6.0, 1e-11
    ).value
    assert combo == pytest.approx(parts, abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(
    c0=st.floats(min_value=-3.0, max_value=3.0),
    c2=st.floats(min_value=-3.0, max_value=3.0),
    c4=st.floats(min_value=-3.0, max_value=3.0),
)
def test_error_estimates_conservative_property(c0, c2, c4):
    exact = c0 + c2 / (2.0 * PI) + c4 * 3.0 / (4.0 * PI * PI)
    f = lambda x: (c0 + c2 * x * x + c4 * x**4) * np.exp(-PI * x * x)
    r = qd.integrate(f, -7.0, 7.0, 1e-10)
    assert abs(r.value - exact) <= r.abs_error_estimate + 1e-13 * (1.0 + abs(exact))
