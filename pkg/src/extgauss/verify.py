"""Named numerical certification suite.

Each registered check verifies one theorem-level claim about the extremal
construction on explicit grids and reports the worst violation found.  A
report satisfies passed == (max_violation <= tolerance).

Conventions:
  * Exact identities are checked with small absolute (or lightly scaled)
    slacks, listed per check, since floating-point evaluation of an exact
    identity is not exact.
  * Strict inequalities are checked at interior sample points against a
    margin of 1e-12; their reports carry tolerance = -1e-12 with
    max_violation the largest value observed (pass means it stays below the
    negative margin).
  * Checks that combine parts with different tolerances report the largest
    part-violation divided by its part-tolerance, against tolerance 1.0;
    their grid note says "normalized".
  * Grids for sign checks step around the integers by 1e-3, where the
    products vanish and a sign is meaningless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from . import extremal, measures, quadrature
from .extremal import Kind, Parity
from . import special_fns as sf

PI = math.pi


class UnknownCheckError(KeyError):
    """Requested check id is not registered."""


@dataclass(frozen=True)
class CheckReport:
    id: str
    anchor: str
    max_violation: float
    tolerance: float
    grid: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "max_violation": self.max_violation,
            "tolerance": self.tolerance,
            "grid": self.grid,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class CheckConfig:
    profile: str = "full"  # "fast" uses coarse grids and lam = 1 only
    perturb_best: float = 0.0  # additive offset on best-approximant values
    arctan_nodes: Optional[int] = None

    @property
    def lam_standard(self) -> Tuple[float, ...]:
        return (1.0,) if self.profile == "fast" else (0.25, 1.0, 4.0)

    @property
    def lam_moderate(self) -> Tuple[float, ...]:
        return (1.0,) if self.profile == "fast" else (0.5, 1.0, 2.0)

    @property
    def grid_points(self) -> int:
        return 801 if self.profile == "fast" else 4001

    @property
    def n_arctan(self) -> int:
        if self.arctan_nodes is not None:
            return self.arctan_nodes
        return 129 if self.profile == "fast" else 513


def _offset_integers(xs: np.ndarray, eps: float = 1e-3) -> np.ndarray:
    xs = xs.copy()
    near = np.abs(xs - np.rint(xs)) < eps
    xs[near] += eps
    return xs


def _report(check_id, anchor, violation, tolerance, grid) -> CheckReport:
    violation = float(violation)
    return CheckReport(check_id, anchor, violation, tolerance, grid, violation <= tolerance)


def _k_eval(cfg: CheckConfig):
    if cfg.perturb_best == 0.0:
        return extremal.eval_best_truncated
    off = cfg.perturb_best
    return lambda lam, x: extremal.eval_best_truncated(lam, x) + off


_ARCTAN_CACHE: Dict[int, measures.MeasureRep] = {}


def _arctan(cfg: CheckConfig) -> measures.MeasureRep:
    n = cfg.n_arctan
    if n not in _ARCTAN_CACHE:
        _ARCTAN_CACHE[n] = measures.arctan_measure(n_nodes=n)
    return _ARCTAN_CACHE[n]


# ---------------------------------------------------------------------------
# extremal-function checks
# ---------------------------------------------------------------------------

def _check_sign_condition_truncated(cfg: CheckConfig) -> CheckReport:
    k = _k_eval(cfg)
    worst = -np.inf
    where = ""
    for lam in cfg.lam_standard:
        xs = _offset_integers(np.linspace(-8.0, 8.0, cfg.grid_points))
        sp = np.sin(PI * xs) * (sf.truncated_gaussian(lam, xs) - k(lam, xs))
        v = -float(np.min(sp))
        if v > worst:
            worst, where = v, f"lam={lam}, x={xs[int(np.argmin(sp))]:.4f}"
    return _report(
        "sign_condition_truncated",
        "sin(pi x) * (target - best approximant) >= 0 on the line",
        max(0.0, worst),
        1e-10,
        f"{cfg.grid_points} pts on [-8,8], lam in {cfg.lam_standard}; worst at {where}",
    )


def _check_sandwich_truncated(cfg: CheckConfig) -> CheckReport:
    worst = -np.inf
    where = ""
    for lam in cfg.lam_standard:
        xs = _offset_integers(np.linspace(-8.0, 8.0, cfg.grid_points))
        g = sf.truncated_gaussian(lam, xs)
        low = extremal.eval_minorant_truncated(lam, xs) - g
        high = g - extremal.eval_majorant_truncated(lam, xs)
        v = float(max(np.max(low), np.max(high)))
        if v > worst:
            worst, where = v, f"lam={lam}"
    return _report(
        "sandwich_truncated",
        "minorant <= target <= majorant on the line",
        max(0.0, worst),
        1e-10,
        f"{cfg.grid_points} pts on [-8,8], lam in {cfg.lam_standard}; worst for {where}",
    )


def _check_odd_sign_condition(cfg: CheckConfig) -> CheckReport:
    worst = -np.inf
    for lam in cfg.lam_standard:
        xs = _offset_integers(np.linspace(-8.0, 8.0, cfg.grid_points))
        sp = np.sin(PI * xs) * (
            sf.odd_gaussian(lam, xs) - extremal.eval_odd(Kind.BEST, lam, xs)
        )
        worst = max(worst, -float(np.min(sp)))
    return _report(
        "odd_sign_condition",
        "sin(pi x) * (odd target - best approximant) >= 0 on the line",
        max(0.0, worst),
        1e-10,
        f"{cfg.grid_points} pts on [-8,8], lam in {cfg.lam_standard}",
    )


def _check_odd_sandwich(cfg: CheckConfig) -> CheckReport:
    worst = -np.inf
    for lam in cfg.lam_standard:
        xs = _offset_integers(np.linspace(-8.0, 8.0, cfg.grid_points))
        g = sf.odd_gaussian(lam, xs)
        low = extremal.eval_odd(Kind.MINORANT, lam, xs) - g
        high = g - extremal.eval_odd(Kind.MAJORANT, lam, xs)
        worst = max(worst, float(max(np.max(low), np.max(high))))
    return _report(
        "odd_sandwich",
        "odd minorant <= odd target <= odd majorant on the line",
        max(0.0, worst),
        1e-10,
        f"{cfg.grid_points} pts on [-8,8], lam in {cfg.lam_standard}",
    )


def _check_interpolation_best(cfg: CheckConfig) -> CheckReport:
    k = _k_eval(cfg)
    ns = np.array([n for n in range(-20, 21) if n != 0], dtype=float)
    worst = 0.0
    for lam in cfg.lam_standard:
        diff = np.abs(k(lam, ns) - sf.truncated_gaussian(lam, ns))
        worst = max(worst, float(np.max(diff)))
    return _report(
        "interpolation_best",
        "best approximant matches the target at nonzero integers",
        worst,
        1e-12,
        f"n in -20..20 nonzero, lam in {cfg.lam_standard}",
    )


def _check_interpolation_onesided(cfg: CheckConfig) -> CheckReport:
    ns = np.array([n for n in range(-20, 21) if n != 0], dtype=float)
    h = 1e-5
    val_worst = 0.0
    der_worst = 0.0
    for lam in cfg.lam_standard:
        g = sf.truncated_gaussian(lam, ns)
        gp = np.where(ns > 0.0, sf.gaussian_prime(lam, ns), 0.0)
        for ev in (extremal.eval_minorant_truncated, extremal.eval_majorant_truncated):
            val_worst = max(val_worst, float(np.max(np.abs(ev(lam, ns) - g))))
            der = (ev(lam, ns + h) - ev(lam, ns - h)) / (2.0 * h)
            der_worst = max(der_worst, float(np.max(np.abs(der - gp))))
    violation = max(val_worst / 1e-12, der_worst / 1e-7)
    return _report(
        "interpolation_onesided",
        "one-sided approximants match target values and derivatives at nonzero integers",
        violation,
        1.0,
        f"normalized (values/1e-12, central-difference derivatives/1e-7), lam in {cfg.lam_standard}",
    )


def _check_ba_error_closed_form(cfg: CheckConfig) -> CheckReport:
    lams = (1.0,) if cfg.profile == "fast" else (0.5, 1.0, 2.0)
    worst = 0.0
    for lam in lams:
        num = extremal.residual_l1(Kind.BEST, lam, tol=1e-9, window=60).value
        worst = max(worst, abs(num - quadrature.H_lambda(lam)))
    return _report(
        "ba_error_closed_form",
        "two-sided L1 gap equals the optimal-error profile H",
        worst,
        1e-6,
        f"windowed quadrature + series tail at cutoff 60, lam in {lams}",
    )


def _check_minorant_error(cfg: CheckConfig) -> CheckReport:
    lams = (1.0,) if cfg.profile == "fast" else (0.5, 1.0, 2.0)
    worst = 0.0
    for lam in lams:
        num = extremal.residual_l1(Kind.MINORANT, lam, tol=1e-9, window=60).value
        worst = max(worst, abs(num - extremal.error_minorant(lam).value))
    return _report(
        "minorant_error",
        "one-sided gap from below equals 1/2 + 1/(2 sqrt lam) - theta3(0,i lam)/2",
        worst,
        1e-7,
        f"windowed quadrature + series tail at cutoff 60, lam in {lams}",
    )


def _check_majorant_error(cfg: CheckConfig) -> CheckReport:
    lams = (1.0,) if cfg.profile == "fast" else (0.5, 1.0, 2.0)
    worst = 0.0
    for lam in lams:
        num = extremal.residual_l1(Kind.MAJORANT, lam, tol=1e-9, window=60).value
        worst = max(worst, abs(num - extremal.error_majorant(lam).value))
    return _report(
        "majorant_error",
        "one-sided gap from above equals theta3(0,i lam)/2 + 1/2 - 1/(2 sqrt lam)",
        worst,
        1e-7,
        f"windowed quadrature + series tail at cutoff 60, lam in {lams}",
    )


# ---------------------------------------------------------------------------
# theta-function checks
# ---------------------------------------------------------------------------

def _check_theta_transformations(cfg: CheckConfig) -> CheckReport:
    lams = (1.0,) if cfg.profile == "fast" else (0.25, 1.0, 4.0)
    zs = (0.0, 0.1, 0.37, 0.5)
    worst = 0.0
    for lam in lams:
        rl = 1.0 / math.sqrt(lam)
        rng = range(-40, 41)
        for z in zs:
            s1 = math.fsum((-1.0) ** (n & 1) * sf.gaussian(lam, z - n) for n in rng)
            s2 = math.fsum(sf.gaussian(lam, z - n - 0.5) for n in rng)
            s3 = math.fsum(sf.gaussian(lam, z - n) for n in rng)
            # the q-series branch is forced so both sides are independent
            pairs = (
                (rl * sf._theta1_qseries(z, 1.0 / lam), s1),
                (rl * sf._theta2_qseries(z, 1.0 / lam), s2),
                (rl * sf._theta3_qseries(z, 1.0 / lam), s3),
            )
            for lhs, rhs in pairs:
                worst = max(worst, abs(lhs - rhs) / (1.0 + abs(rhs)))
    return _report(
        "theta_transformations",
        "theta at inverse modulus equals its Gaussian translate sum",
        worst,
        1e-12,
        f"relative; z in {zs}, lam in {lams}",
    )


def _check_theta1_theta2_link(cfg: CheckConfig) -> CheckReport:
    lams = cfg.lam_moderate
    xs = np.linspace(0.0, 0.45, 46)
    worst = 0.0
    for lam in lams:
        lhs = sf.theta1(xs, 1.0 / lam) / math.sqrt(lam)
        rhs = sf.gaussian(lam, xs) * sf.theta2_imag(-lam * xs, lam)
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / (1.0 + np.abs(rhs)))))
    return _report(
        "theta1_theta2_link",
        "theta1 at inverse modulus factors as Gaussian times theta2 on the imaginary axis",
        worst,
        1e-12,
        f"relative; x in [0,0.45], lam in {lams}",
    )


def _check_lemma_theta2_signs(cfg: CheckConfig) -> CheckReport:
    lams = cfg.lam_moderate
    margin = 1e-12
    worst = -np.inf
    for lam in lams:
        xs = np.linspace(-0.45 * lam, -0.05 * lam, 21)
        pos = sf.theta2_dz_imag(xs, lam)
        worst = max(worst, margin - float(np.min(pos)))
        ys = np.linspace(0.0, 0.5, 51)
        worst = max(worst, float(np.max(sf.theta3_dz(ys, lam))))
    return _report(
        "lemma_theta2_signs",
        "i*theta2'(ix,i lam) > 0 on (-lam/2,0); theta3'(x,i lam) <= 0 on [0,1/2]",
        worst,
        margin,
        f"interior grids, lam in {lams}",
    )


def _check_theta_ratio_bound(cfg: CheckConfig) -> CheckReport:
    lams = cfg.lam_moderate
    xs = np.linspace(0.0, 0.4999, 120)
    worst = -np.inf
    for lam in lams:
        ratio = sf.theta1(xs, 1.0 / lam) / sf.theta1(0.0, 1.0 / lam)
        worst = max(worst, float(np.max(ratio - sf.gaussian(lam, xs))))
    return _report(
        "theta_ratio_bound",
        "theta1 ratio at inverse modulus is bounded by the Gaussian on [0, 1/2)",
        max(0.0, worst),
        1e-12,
        f"x in [0,0.5), lam in {lams}",
    )


def _check_laplace_theta_negative(cfg: CheckConfig) -> CheckReport:
    samples = (
        ((1.0,), (1.0,)) if cfg.profile == "fast" else ((0.1, 1.0, 5.0), (0.5, 1.0, 2.0))
    )
    xs, lams = samples
    worst = -np.inf
    for lam in lams:
        t10 = sf.theta1(0.0, 1.0 / lam)
        for x in xs:
            T = math.log(1e16) / (2.0 * PI * lam * x) + 2.0

            def f(t):
                return np.exp(-2.0 * PI * lam * x * t) * (
                    sf.theta1(t, 1.0 / lam) - t10 * sf.gaussian(lam, t)
                )

            pts = np.arange(0.5, T, 0.5)
            val = quadrature.integrate(f, 0.0, T, 1e-12, points=pts).value
            worst = max(worst, val)
    return _report(
        "laplace_theta_negative",
        "Laplace transform of the centered theta1 difference is strictly negative",
        worst,
        -1e-12,
        f"x in {xs}, lam in {lams} (strict: value <= -margin)",
    )


def _check_sum_inequalities(cfg: CheckConfig) -> CheckReport:
    worst = -np.inf
    n = np.arange(1, 80, dtype=float)
    for t in (0.01, 0.1, 1.0, 10.0):
        e = np.exp(-t * n * n)
        s1 = float(np.sum(np.where(np.mod(n, 2.0) == 1.0, 1.0, -1.0) * n * n * e))
        s2 = 1.0 + float(np.sum(e * (1.0 - 2.0 * t * n * n)))
        s3 = float(np.sum(e * (t * n**3 - n)))
        worst = max(worst, -s1, 0.5 - s2, -s3)
    return _report(
        "sum_inequalities",
        "positivity bounds for three Gaussian power sums",
        max(0.0, worst),
        1e-12,
        "t in {0.01, 0.1, 1, 10}, 79 terms",
    )


def _check_dawson_bounds(cfg: CheckConfig) -> CheckReport:
    xs1 = np.linspace(1.0, 10.0, 46)
    d1 = sf.dawson(xs1)
    v1 = float(np.max(1.0 / (2.0 * xs1) - d1))
    xs2 = np.linspace(2.0, 10.0, 41)
    d2 = sf.dawson(xs2)
    v2 = float(np.max((xs2**2 - 1.0) / (xs2 * (2.0 * xs2**2 - 3.0)) - d2))
    return _report(
        "dawson_bounds",
        "Dawson's integral dominates 1/(2x) on [1,10] and (x^2-1)/(x(2x^2-3)) on [2,10]",
        max(0.0, v1, v2),
        1e-12,
        "46 pts on [1,10]; 41 pts on [2,10]",
    )


def _check_dawson_moments(cfg: CheckConfig) -> CheckReport:
    worst = 0.0
    for x in (0.3, 1.0, 2.5):
        d = sf.dawson(x)
        closed = {
            0: d,
            2: 0.5 * x + d * (0.5 - x * x),
            4: 1.25 * x - 0.5 * x**3 + d * (0.75 - 3.0 * x * x + x**4),
        }
        for j, ref in closed.items():
            def f(u):
                return u**j * np.exp(-u * u) * np.sin(2.0 * x * u)

            val = quadrature.integrate(f, 0.0, 9.0, 1e-12).value
            worst = max(worst, abs(val - ref))
    return _report(
        "dawson_moments",
        "Gaussian sine moments of order 0,2,4 reduce to Dawson's integral",
        worst,
        1e-9,
        "x in {0.3, 1, 2.5}, window [0,9]",
    )


def _check_truncated_theta_inequalities(cfg: CheckConfig) -> CheckReport:
    lams = cfg.lam_moderate
    slack = 1e-10
    worst = -np.inf
    for lam in lams:
        xn = np.linspace(-6.0, -1e-3, 400)
        g = sf.gaussian(lam, xn)
        thp0 = sf.theta_plus(0.0, lam)
        vth0 = sf.vartheta_plus(0.0, lam)
        v1 = -(thp0 * g - sf.theta_plus(xn, lam))
        diff2 = vth0 * g - sf.vartheta_plus(xn, lam)
        v2 = -diff2
        v3 = diff2 - 0.5 * sf.gaussian_prime(lam, xn)
        xp = np.linspace(0.0, 0.5, 101)
        v4a = vth0 * sf.gaussian(lam, xp) - vth0
        v4b = vth0 - sf.vartheta_plus(xp, lam)
        worst = max(
            worst,
            float(np.max(v1)),
            float(np.max(v2)),
            float(np.max(v3)),
            float(np.max(v4a)),
            float(np.max(v4b)),
        )
    return _report(
        "truncated_theta_inequalities",
        "one-sided theta sums dominated by their central values",
        max(0.0, worst),
        slack,
        f"x<0 and [0,1/2] grids, lam in {lams}",
    )


def _check_growth_estimates(cfg: CheckConfig) -> CheckReport:
    lams = cfg.lam_moderate
    worst = -np.inf
    for lam in lams:
        us = np.linspace(-6.0, 1.0, 351)
        bound = 2.0 * sf.gaussian(lam, us - 1.0)
        un = np.linspace(-6.0, 0.0, 301)
        n_arr = np.arange(1.0, 200.0)
        c_lam = (
            2.0
            * PI
            * lam
            / sf.gaussian(lam, 1.0)
            * float(np.sum(n_arr * np.exp(-PI * lam * n_arr**2)))
        )
        vbound = c_lam * (np.abs(un) + 1.0) * sf.gaussian(lam, 1.0 - un)
        vfull = sf.vartheta_plus(un, lam)
        part = np.zeros_like(us)
        vpart = np.zeros_like(un)
        for n in range(1, 51):
            sgn = 1.0 if (n & 1) else -1.0
            part = part + sgn * sf.gaussian(lam, us - n)
            vpart = vpart + 2.0 * PI * lam * (n - un) * sf.gaussian(lam, n - un)
            worst = max(worst, float(np.max(np.abs(part) - bound)))
            worst = max(worst, float(np.max(-vpart)))          # 0 <= partial
            worst = max(worst, float(np.max(vpart - vfull)))   # partial <= full
        worst = max(worst, float(np.max(vfull - vbound)))
    return _report(
        "growth_estimates",
        "uniform growth bounds for partial translate sums",
        max(0.0, worst),
        1e-10,
        f"N in 1..50, u grids, lam in {lams}",
    )


# ---------------------------------------------------------------------------
# transform and summation identities
# ---------------------------------------------------------------------------

def _check_ft_truncated(cfg: CheckConfig) -> CheckReport:
    lam = 1.0
    worst = 0.0
    for t in (0.0, 0.5, 1.5):
        closed = sf.ft_truncated_gaussian(lam, t)
        re = quadrature.integrate(
            lambda x: np.cos(2.0 * PI * t * x) * sf.gaussian(lam, x), 0.0, 8.0, 1e-12
        ).value
        im = -quadrature.integrate(
            lambda x: np.sin(2.0 * PI * t * x) * sf.gaussian(lam, x), 0.0, 8.0, 1e-12
        ).value if t != 0.0 else 0.0
        worst = max(worst, abs(closed - complex(re, im)))
    # magnitude bound |ft| <= 1/(2 sqrt lam) + |t|/lam
    for t in (0.5, 1.5):
        v = abs(sf.ft_truncated_gaussian(lam, t))
        worst = max(worst, v - (0.5 / math.sqrt(lam) + abs(t) / lam))
    return _report(
        "ft_truncated",
        "closed-form transform of the one-sided Gaussian matches direct integration",
        worst,
        1e-9,
        "t in {0, 0.5, 1.5}, lam=1, direct window (0,8]",
    )


def fourier_sum_value(lam: float, nmax: int = 200) -> Tuple[float, float]:
    """Half-integer frequency sum for the optimal two-sided error.

    Returns (value, imag_residual).  Frequencies +-(n+1/2) for n = 0..nmax are
    summed in symmetric pairs (the transform at -t is the conjugate), and the
    missing tail is completed with its asymptotic 1/(pi^2 t^2) law, whose
    partial zeta sum is evaluated by Euler-Maclaurin.
    """
    total = 0.0 + 0.0j
    for n in range(0, nmax + 1):
        t = n + 0.5
        v = sf.ft_truncated_gaussian(lam, t)
        total += v / t + v.conjugate() / (-t)
    val = 1j / PI * total
    a = nmax + 1.5
    tail = (1.0 / a + 0.5 / a**2 + 1.0 / (6.0 * a**3)) / (PI * PI)
    return val.real + tail, abs(val.imag)


def _check_fourier_sum_identity(cfg: CheckConfig) -> CheckReport:
    lams = (1.0,) if cfg.profile == "fast" else (0.5, 1.0, 2.0)
    worst = 0.0
    for lam in lams:
        val, imag = fourier_sum_value(lam, nmax=200)
        worst = max(worst, imag / 1e-10, abs(val - quadrature.H_lambda(lam)) / 1e-6)
    return _report(
        "fourier_sum_identity",
        "half-integer frequency sum reproduces the optimal two-sided error",
        worst,
        1.0,
        f"normalized (imag/1e-10, value/1e-6); 201 frequencies, lam in {lams}",
    )


def _check_poisson_value(cfg: CheckConfig) -> CheckReport:
    lams = cfg.lam_moderate
    ns = np.arange(-40.0, 41.0)
    worst = 0.0
    for lam in lams:
        total = float(np.sum(extremal.eval_minorant_truncated(lam, ns)))
        ref = 0.5 * sf.theta3(0.0, lam) - 0.5
        worst = max(worst, abs(total - ref))
    return _report(
        "poisson_value",
        "lattice sum of the minorant telescopes to (theta3 - 1)/2",
        worst,
        1e-10,
        f"|n| <= 40, lam in {lams}",
    )


def _check_h_asymptotics(cfg: CheckConfig) -> CheckReport:
    parts = []
    parts.append(abs(quadrature.H_lambda(1e-4) - 0.5) / 0.005)
    parts.append(abs(math.sqrt(1e4) * quadrature.H_lambda(1e4) - 0.5) / 0.005)
    lam = 10.0
    with np.errstate(over="ignore", under="ignore"):
        lower = quadrature.integrate(
            lambda p: (1.0 - 2.0 * np.exp(-PI * lam / np.cos(p) ** 2)) / PI,
            0.0,
            PI / 2.0,
            1e-11,
        ).value
    mid = math.sqrt(lam) * quadrature.H_lambda(lam)
    parts.append(max(0.0, lower - mid, mid - 0.5) / 1e-9)
    for t in (0.5, 1.5):
        for lam_t in (0.1, 1.0):
            a = PI * t * t / lam_t
            q = quadrature.integrate(
                lambda y: np.exp(-a * (1.0 - y * y)), 0.0, 1.0, 1e-13
            ).value
            h_t = q / (PI * lam_t)
            parts.append(max(0.0, h_t - 1.0 / (PI * PI * t * t)) / 1e-12)
    return _report(
        "h_asymptotics",
        "H tends to 1/2 at 0, decays like 1/(2 sqrt lam), and sits inside its brackets",
        max(parts),
        1.0,
        "normalized (limits/1%, bracket/1e-9, per-frequency bound/1e-12)",
    )


# ---------------------------------------------------------------------------
# integral representations
# ---------------------------------------------------------------------------

def _core_exp(lam, z, w, t, u):
    expo = -2.0 * PI * lam * t * u - PI * lam * (z - t) ** 2 - PI * lam * (w - u) ** 2
    with np.errstate(under="ignore"):
        return np.exp(expo)


def _check_integral_representations(cfg: CheckConfig) -> CheckReport:
    lam = 1.0
    c = 2.0 * PI * lam**1.5
    tol2d = 1e-7 if cfg.profile == "fast" else 1e-8
    one = cfg.profile == "fast"
    worst = 0.0

    def rect(z, w, tq, uq):
        e = 10.0 + 2.0 * (abs(z) + abs(w))
        spans = {"neg": (-e, 0.0), "pos": (0.0, e), "all": (-e, e)}
        return (spans[tq], spans[uq])

    def dbl(z, w, tq, uq):
        f = lambda t, u: _core_exp(lam, z, w, t, u)
        return quadrature.integrate_2d(f, rect(z, w, tq, uq), tol2d).value

    # reciprocal-Gaussian identity (1D)
    for z in (0.8,) if one else (0.8, -0.6):
        val = (
            math.sqrt(lam)
            * quadrature.integrate(
                lambda u: np.exp(-2.0 * PI * lam * z * u - PI * lam * u * u),
                -abs(z) - 8.0,
                abs(z) + 8.0,
                1e-10,
            ).value
        )
        ref = math.exp(PI * lam * z * z)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))

    # difference-quotient representation
    for z, w in ((0.4, -0.9),) if one else ((0.4, -0.9), (-1.3, 0.7)):
        val = c * (dbl(z, w, "neg", "neg") - dbl(z, w, "pos", "pos"))
        ref = (sf.gaussian(lam, z) - sf.gaussian(lam, w)) / (z - w)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))

    # G(w)/(z-w), left ordering (Re z < Re w)
    for z, w in ((-1.3, 0.7),) if one else ((-1.3, 0.7), (0.1, 0.9)):
        val = -c * dbl(z, w, "all", "neg")
        ref = sf.gaussian(lam, w) / (z - w)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))

    # G(z)/(z-w), left ordering
    for z, w in ((-1.3, 0.7),) if one else ((-1.3, 0.7), (0.1, 0.9)):
        val = -c * (dbl(z, w, "pos", "neg") + dbl(z, w, "pos", "pos"))
        ref = sf.gaussian(lam, z) / (z - w)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))

    # G(w)/(z-w), right ordering (Re z > Re w)
    for z, w in ((1.2, 0.3),) if one else ((1.2, 0.3), (0.7, -0.5)):
        val = c * dbl(z, w, "all", "pos")
        ref = sf.gaussian(lam, w) / (z - w)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))

    # G(z)/(z-w), right ordering
    for z, w in ((1.2, 0.3),) if one else ((1.2, 0.3), (0.7, -0.5)):
        val = c * (dbl(z, w, "neg", "neg") + dbl(z, w, "neg", "pos"))
        ref = sf.gaussian(lam, z) / (z - w)
        worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))

    return _report(
        "integral_representations",
        "two-sided Laplace product representations of Gaussian difference quotients",
        worst,
        1e-6,
        f"relative; lam=1, {'one point' if one else 'two points'} per identity",
    )


# ---------------------------------------------------------------------------
# measure checks
# ---------------------------------------------------------------------------

def _check_measure_point_mass(cfg: CheckConfig) -> CheckReport:
    worst = 0.0
    lams = (1.0,) if cfg.profile == "fast" else (0.5, 1.0, 2.0)
    xs = np.array([-1.7, -0.3, 0.0, 0.3, 1.0])
    for lam0 in lams:
        m = measures.MeasureRep(atoms=((lam0, 1.0),))
        t = measures.IntegratedTarget(m, Parity.TRUNCATED)
        worst = max(
            worst,
            float(np.max(np.abs(measures.eval_g(t, xs) - sf.truncated_gaussian(lam0, xs)))),
        )
        for kind in Kind:
            got = measures.eval_integrated(kind, t, xs)
            ref = extremal.eval_truncated(kind, lam0, xs)
            worst = max(worst, float(np.max(np.abs(got - ref))))
            worst = max(
                worst,
                abs(
                    measures.integrated_error(kind, m)
                    - extremal.error_truncated(kind, lam0).value
                ),
            )
    return _report(
        "measure_point_mass",
        "point-mass measures reduce to the single-parameter quantities",
        worst,
        1e-12,
        f"lam0 in {lams}, five sample points, all kinds",
    )


def _check_measure_linearity(cfg: CheckConfig) -> CheckReport:
    a, b = 0.25, 0.75
    m = measures.MeasureRep(atoms=((1.0, a), (4.0, b)))
    t = measures.IntegratedTarget(m, Parity.TRUNCATED)
    worst = 0.0
    for kind in Kind:
        combo = measures.integrated_error(kind, m)
        parts = a * extremal.error_truncated(kind, 1.0).value + b * extremal.error_truncated(
            kind, 4.0
        ).value
        worst = max(worst, abs(combo - parts))
    xs = np.array([-0.6, 0.7, 1.4])
    for kind in Kind:
        combo = measures.eval_integrated(kind, t, xs)
        parts = a * extremal.eval_truncated(kind, 1.0, xs) + b * extremal.eval_truncated(
            kind, 4.0, xs
        )
        worst = max(worst, float(np.max(np.abs(combo - parts))))
    return _report(
        "measure_linearity",
        "integrated errors and evaluations are linear over atoms",
        worst,
        1e-13,
        "atoms {(1, 0.25), (4, 0.75)}",
    )


def _check_arctan_example(cfg: CheckConfig) -> CheckReport:
    m = _arctan(cfg)
    status, mass = measures.check_admissible(m, measures.NU2)
    t = measures.IntegratedTarget(m, Parity.ODD)
    xs = np.array([0.5, 1.0, 2.0])
    got = measures.eval_g(t, xs)
    ref = measures.arctan_target(xs)
    worst = float(np.max(np.abs(got - ref)))
    g5, g10 = measures.eval_g(t, 5.0), measures.eval_g(t, 10.0)
    side_ok = status is True and math.isfinite(mass) and g5 > g10 > 0.0
    if not side_ok:
        worst = float("inf")
    return _report(
        "arctan_example",
        "the sampled density reproduces its closed-form odd target",
        worst,
        1e-4,
        f"x in {{0.5,1,2}}; finite mass {mass:.6f}; decay checked at 5,10; "
        f"{cfg.n_arctan} nodes",
    )


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_REGISTRY: Dict[str, Callable[[CheckConfig], CheckReport]] = {
    "sign_condition_truncated": _check_sign_condition_truncated,
    "ba_error_closed_form": _check_ba_error_closed_form,
    "sandwich_truncated": _check_sandwich_truncated,
    "minorant_error": _check_minorant_error,
    "majorant_error": _check_majorant_error,
    "odd_sign_condition": _check_odd_sign_condition,
    "odd_sandwich": _check_odd_sandwich,
    "interpolation_best": _check_interpolation_best,
    "interpolation_onesided": _check_interpolation_onesided,
    "theta_transformations": _check_theta_transformations,
    "theta1_theta2_link": _check_theta1_theta2_link,
    "lemma_theta2_signs": _check_lemma_theta2_signs,
    "theta_ratio_bound": _check_theta_ratio_bound,
    "laplace_theta_negative": _check_laplace_theta_negative,
    "sum_inequalities": _check_sum_inequalities,
    "dawson_bounds": _check_dawson_bounds,
    "dawson_moments": _check_dawson_moments,
    "integral_representations": _check_integral_representations,
    "truncated_theta_inequalities": _check_truncated_theta_inequalities,
    "growth_estimates": _check_growth_estimates,
    "ft_truncated": _check_ft_truncated,
    "fourier_sum_identity": _check_fourier_sum_identity,
    "poisson_value": _check_poisson_value,
    "h_asymptotics": _check_h_asymptotics,
    "measure_point_mass": _check_measure_point_mass,
    "measure_linearity": _check_measure_linearity,
    "arctan_example": _check_arctan_example,
}


def registered_checks() -> List[str]:
    return list(_REGISTRY)


def run_check(check_id: str, config: Optional[CheckConfig] = None) -> CheckReport:
    """Run one registered check deterministically."""
    if check_id not in _REGISTRY:
        raise UnknownCheckError(check_id)
    return _REGISTRY[check_id](config or CheckConfig())


def run_all(profile: str = "full", config: Optional[CheckConfig] = None) -> List[CheckReport]:
    """Run every registered check; failures are reports, not exceptions."""
    if profile not in ("fast", "full"):
        raise ValueError(f"unknown profile {profile!r}")
    cfg = replace(config or CheckConfig(), profile=profile)
    return [run_check(cid, cfg) for cid in _REGISTRY]
