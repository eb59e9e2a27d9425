import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extgauss import extremal as ex
from extgauss import quadrature as qd
from extgauss import special_fns as sf
from extgauss.extremal import Kind, Parity

PI = math.pi

LAMS = (0.25, 1.0, 4.0)
NODES = np.array([n for n in range(-20, 21) if n != 0], dtype=float)


def offset_grid(lo, hi, n):
    xs = np.linspace(lo, hi, n)
    near = np.abs(xs - np.rint(xs)) < 1e-3
    xs[near] += 1e-3
    return xs


class TestInterpolation:
    @pytest.mark.parametrize("lam", LAMS)
    def test_best_values(self, lam):
        diff = np.abs(ex.eval_best_truncated(lam, NODES) - sf.truncated_gaussian(lam, NODES))
        assert np.max(diff) < 1e-12

    @pytest.mark.parametrize("lam", LAMS)
    @pytest.mark.parametrize(
        "ev", [ex.eval_minorant_truncated, ex.eval_majorant_truncated]
    )
    def test_one_sided_values_and_derivatives(self, lam, ev):
        g = sf.truncated_gaussian(lam, NODES)
        assert np.max(np.abs(ev(lam, NODES) - g)) < 1e-12
        h = 1e-5
        der = (ev(lam, NODES + h) - ev(lam, NODES - h)) / (2.0 * h)
        gp = np.where(NODES > 0, sf.gaussian_prime(lam, NODES), 0.0)
        assert np.max(np.abs(der - gp)) < 1e-7

    def test_best_positive_nodes_hit_gaussian(self):
        for n in (1.0, 2.0, 3.0):
            assert ex.eval_best_truncated(1.0, n) == pytest.approx(
                sf.gaussian(1.0, n), abs=1e-16
            )

    def test_best_negative_nodes_vanish(self):
        for n in (-1.0, -2.0):
            assert abs(ex.eval_best_truncated(1.0, n)) < 1e-16


class TestCentralValues:
    def test_best_at_zero_is_alternating_sum(self):
        assert ex.eval_best_truncated(1.0, 0.0) == pytest.approx(
            sf.theta_plus(0.0, 1.0), abs=1e-16
        )
        # the limit is attained continuously
        assert ex.eval_best_truncated(1.0, 1e-6) == pytest.approx(
            sf.theta_plus(0.0, 1.0), abs=1e-5
        )

    def test_minorant_zero(self):
        assert ex.eval_minorant_truncated(1.0, 0.0) == 0.0

    def test_majorant_zero(self):
        assert ex.eval_majorant_truncated(1.0, 0.0) == 1.0
        assert ex.eval_majorant_truncated(1.0, 1e-6) == pytest.approx(1.0, abs=1e-5)

    def test_majorant_minus_minorant_is_sinc_squared(self):
        xs = offset_grid(-5.0, 5.0, 401)
        gap = ex.eval_majorant_truncated(1.0, xs) - ex.eval_minorant_truncated(1.0, xs)
        ref = np.sinc(xs) ** 2
        assert np.max(np.abs(gap - ref)) < 1e-15


class TestInequalities:
    @pytest.mark.parametrize("lam", LAMS)
    def test_sign_condition(self, lam):
        xs = offset_grid(-8.0, 8.0, 4001)
        sp = np.sin(PI * xs) * (
            sf.truncated_gaussian(lam, xs) - ex.eval_best_truncated(lam, xs)
        )
        assert np.min(sp) >= -1e-10

    @pytest.mark.parametrize("lam", LAMS)
    def test_sandwich(self, lam):
        xs = offset_grid(-8.0, 8.0, 4001)
        g = sf.truncated_gaussian(lam, xs)
        assert np.min(g - ex.eval_minorant_truncated(lam, xs)) >= -1e-10
        assert np.min(ex.eval_majorant_truncated(lam, xs) - g) >= -1e-10


class TestOdd:
    def test_antisymmetry_at_zero(self):
        assert ex.eval_odd(Kind.BEST, 1.0, 0.0) == 0.0

    def test_minorant_below_odd_gaussian(self):
        xs = offset_grid(-4.0, 4.0, 801)
        assert np.min(sf.odd_gaussian(1.0, xs) - ex.eval_odd(Kind.MINORANT, 1.0, xs)) >= -1e-10

    def test_reflection_identity_exact(self):
        xs = np.linspace(-3.0, 3.0, 41)
        lhs = ex.eval_odd(Kind.MAJORANT, 1.0, -xs)
        rhs = -ex.eval_odd(Kind.MINORANT, 1.0, xs)
        assert np.all(lhs == rhs)

    def test_scalar_reflection(self):
        x = 0.7
        assert ex.eval_odd(Kind.MAJORANT, 1.0, -x) == -ex.eval_odd(Kind.MINORANT, 1.0, x)

    def test_odd_sign_condition(self):
        xs = offset_grid(-8.0, 8.0, 2001)
        sp = np.sin(PI * xs) * (sf.odd_gaussian(1.0, xs) - ex.eval_odd(Kind.BEST, 1.0, xs))
        assert np.min(sp) >= -1e-10


class TestErrors:
    def test_minorant_closed_form(self):
        theta3 = 1.0 + 2.0 * sum(math.exp(-PI * n * n) for n in range(1, 11))
        assert ex.error_minorant(1.0).value == pytest.approx(1.0 - theta3 / 2.0, abs=1e-14)
        assert ex.error_minorant(1.0).value == pytest.approx(0.4567825943933460, abs=1e-12)

    def test_majorant_closed_form(self):
        theta3 = 1.0 + 2.0 * sum(math.exp(-PI * n * n) for n in range(1, 11))
        assert ex.error_majorant(1.0).value == pytest.approx(theta3 / 2.0, abs=1e-14)

    def test_one_sided_errors_sum_to_one(self):
        for lam in (0.37, 1.0, 5.0):
            total = ex.error_minorant(lam).value + ex.error_majorant(lam).value
            assert total == pytest.approx(1.0, abs=1e-13)

    def test_best_error_is_h_profile(self):
        assert ex.error_best(1.0).value == pytest.approx(qd.H_lambda(1.0), abs=1e-14)

    def test_best_error_limits(self):
        assert abs(ex.error_best(1e-4).value - 0.5) < 0.005
        assert abs(100.0 * ex.error_best(1e4).value - 0.5) < 0.005

    def test_kinds_tagged(self):
        assert ex.error_best(1.0).kind is Kind.BEST
        assert ex.error_minorant(1.0).kind is Kind.MINORANT
        assert ex.error_majorant(1.0).kind is Kind.MAJORANT


class TestResidualL1:
    def test_best_matches_h(self):
        r = ex.residual_l1(Kind.BEST, 1.0, tol=1e-9, window=60)
        assert abs(r.value - qd.H_lambda(1.0)) < 1e-6

    def test_minorant_matches_closed_form(self):
        r = ex.residual_l1(Kind.MINORANT, 1.0, tol=1e-9, window=60)
        assert abs(r.value - ex.error_minorant(1.0).value) < 1e-7

    def test_majorant_matches_closed_form(self):
        r = ex.residual_l1(Kind.MAJORANT, 1.0, tol=1e-9, window=60)
        assert abs(r.value - ex.error_majorant(1.0).value) < 1e-7


class TestTails:
    """The closed-form window tails against brute strip integration."""

    @pytest.mark.parametrize("kind", [Kind.BEST, Kind.MINORANT, Kind.MAJORANT])
    def test_tail_telescopes(self, kind):
        lam, w1, w2 = 1.0, 60, 220
        t1, _ = ex.l1_tail(kind, lam, w1)
        t2, _ = ex.l1_tail(kind, lam, w2)
        strip = 0.0
        for a in range(w1, w2):
            for sign in (1.0, -1.0):
                lo, hi = sign * a, sign * (a + 1)
                lo, hi = min(lo, hi), max(lo, hi)
                d = lambda x: sf.truncated_gaussian(lam, x) - ex.eval_truncated(
                    kind, lam, x
                )
                strip += abs(qd.integrate(d, lo, hi, 1e-13).value)
        assert t1 == pytest.approx(strip + t2, abs=5e-10)

    def test_cutoff_too_small_rejected(self):
        with pytest.raises(ValueError):
            ex.l1_tail(Kind.BEST, 0.1, 5)


class TestApproximantAndDilation:
    def test_identity_dilation(self):
        a = ex.Approximant(Kind.BEST, Parity.TRUNCATED, 1.0)
        assert ex.dilate(a, 1.0) == a

    def test_dilated_nodes(self):
        a = ex.Approximant(Kind.BEST, Parity.TRUNCATED, 1.0)
        d = ex.dilate(a, 2.0)
        assert d.lam == 4.0 and d.delta == 2.0
        # interpolation moves to the half-integers
        assert d.evaluate(0.5) == pytest.approx(d.target(0.5), abs=1e-12)
        assert d.target(0.5) == pytest.approx(math.exp(-PI), abs=1e-16)

    def test_dilation_scales_error(self):
        a = ex.Approximant(Kind.BEST, Parity.TRUNCATED, 1.0)
        d = ex.dilate(a, 2.0)
        assert d.error().value == pytest.approx(a.error().value / 2.0, abs=1e-15)

    def test_dilated_error_against_numeric_l1(self):
        a = ex.Approximant(Kind.BEST, Parity.TRUNCATED, 1.0)
        d = ex.dilate(a, 2.0)
        # change of variables maps the dilated gap onto the base one, so the
        # windowed-with-tail base integral at half scale is the oracle
        base = ex.residual_l1(Kind.BEST, 1.0, tol=1e-9, window=60).value
        assert d.error().value == pytest.approx(base / 2.0, abs=1e-6)

    def test_odd_error_values(self):
        a = ex.Approximant(Kind.BEST, Parity.ODD, 1.0)
        assert a.error().value == pytest.approx(2.0 * qd.H_lambda(1.0), abs=1e-12)
        m = ex.Approximant(Kind.MINORANT, Parity.ODD, 1.0)
        assert m.error().value == pytest.approx(1.0, abs=1e-13)

    def test_validation(self):
        with pytest.raises(sf.DomainError):
            ex.Approximant(Kind.BEST, Parity.TRUNCATED, -1.0)
        with pytest.raises(sf.DomainError):
            ex.Approximant(Kind.BEST, Parity.TRUNCATED, 1.0, 0.0)
        a = ex.Approximant(Kind.BEST, Parity.TRUNCATED, 1.0)
        with pytest.raises(sf.DomainError):
            ex.dilate(a, -2.0)


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(min_value=-12, max_value=12).filter(lambda n: n != 0),
    lam=st.floats(min_value=0.3, max_value=3.0),
)
def test_interpolation_property(n, lam):
    target = sf.truncated_gaussian(lam, float(n))
    assert ex.eval_best_truncated(lam, float(n)) == pytest.approx(target, abs=1e-13)
    assert ex.eval_minorant_truncated(lam, float(n)) == pytest.approx(target, abs=1e-13)


@settings(max_examples=30, deadline=None)
@given(
    x=st.floats(min_value=-4.0, max_value=4.0),
    lam=st.floats(min_value=0.3, max_value=3.0),
)
def test_sandwich_property(x, lam):
    g = sf.truncated_gaussian(lam, x)
    assert ex.eval_minorant_truncated(lam, x) <= g + 1e-10
    assert g <= ex.eval_majorant_truncated(lam, x) + 1e-10
