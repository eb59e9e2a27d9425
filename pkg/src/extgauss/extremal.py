"""Extremal bandlimited approximants to the truncated and odd Gaussians.

Three interpolation series are provided per decay parameter lam: the best
two-sided approximation of exponential type pi, and the extremal minorant and
majorant of type 2*pi.  All three interpolate the one-sided Gaussian at the
nonzero integers (the one-sided pair also matches its derivative there), and
their L1 gaps have closed forms in theta values.

Evaluation is stable on the whole line: every term that would read
sin(pi*x)/(x - n) near its node is rewritten through the normalized sinc
phi(w) = sin(pi*w)/(pi*w), so removable singularities are handled
analytically rather than by limits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .quadrature import H_lambda, QuadResult, l1_distance
from .special_fns import (
    DomainError,
    _as_farray,
    _check_lam,
    _ret,
    odd_gaussian,
    theta3,
    truncated_gaussian,
)

PI = math.pi


class Kind(enum.Enum):
    BEST = "best"
    MINORANT = "minorant"
    MAJORANT = "majorant"


class Parity(enum.Enum):
    TRUNCATED = "truncated"
    ODD = "odd"


@dataclass(frozen=True)
class ErrorValue:
    """A minimal L1 approximation gap, tagged with the approximant kind."""

    value: float
    kind: Kind


def _series_cutoff(lam: float, xmax: float) -> int:
    # translate count set by the Gaussian factor; the 1/(x-n) weights decay
    # too slowly on their own to key the truncation on
    arg = math.log(1e18 * max(1.0, xmax))
    return max(2, int(math.ceil(math.sqrt(arg / (PI * lam)))) + 1)


def eval_best_truncated(lam, x):
    """Best two-sided approximation of type pi to the truncated Gaussian."""
    lam = _check_lam(lam)
    x_arr, scalar = _as_farray(x)
    m = np.rint(x_arr)
    r = x_arr - m
    sinr = np.sin(PI * r)
    sign_m = np.where(np.mod(m, 2.0) == 0.0, 1.0, -1.0)
    sin_pix = sign_m * sinr
    nmax = _series_cutoff(lam, float(np.max(np.abs(x_arr), initial=1.0)))
    acc = np.zeros_like(x_arr)
    alt_sum = 0.0
    for n in range(1, nmax + 1):
        gn = math.exp(-PI * lam * n * n)
        sgn = -1.0 if (n & 1) else 1.0
        alt_sum += sgn * gn
        near = m == n
        denom = np.where(near, 1.0, x_arr - n)
        plain = sgn * gn * sin_pix / (PI * denom)
        acc = acc + np.where(near, gn * np.sinc(r), plain)
    # the -1/x column: sum of (-1)^n G(n) equals -theta_plus(0, lam)
    thp0 = -alt_sum
    near0 = m == 0.0
    denom0 = np.where(near0, 1.0, x_arr)
    zero_part = np.where(near0, thp0 * np.sinc(r), thp0 * sin_pix / (PI * denom0))
    return _ret(acc + zero_part, scalar)


def _one_sided_core(lam, x_arr):
    m = np.rint(x_arr)
    r = x_arr - m
    sinr = np.sin(PI * r)
    sin2 = sinr * sinr
    sinc_r = np.sinc(r)
    nmax = _series_cutoff(lam, float(np.max(np.abs(x_arr), initial=1.0)))
    acc = np.zeros_like(x_arr)
    gp_sum = 0.0
    for n in range(1, nmax + 1):
        gn = math.exp(-PI * lam * n * n)
        gpn = -2.0 * PI * lam * n * gn
        gp_sum += gpn
        near = m == n
        dn = np.where(near, 1.0, x_arr - n)
        plain = (sin2 / (PI * PI)) * (gn / (dn * dn) + gpn / dn)
        acc = acc + np.where(near, gn * sinc_r * sinc_r + gpn * sinc_r * sinc_r * r, plain)
    near0 = m == 0.0
    denom0 = np.where(near0, 1.0, x_arr)
    # sin^2(pi x)/(pi^2 x) == sinc(x)^2 * x, used when x sits near the origin
    zero_part = np.where(
        near0,
        -gp_sum * sinc_r * sinc_r * r,
        -(sin2 / (PI * PI)) * gp_sum / denom0,
    )
    central = np.where(near0, sinc_r * sinc_r, sin2 / (PI * PI * denom0 * denom0))
    return acc + zero_part, central


def eval_minorant_truncated(lam, x):
    """Extremal minorant of type 2*pi for the truncated Gaussian."""
    lam = _check_lam(lam)
    x_arr, scalar = _as_farray(x)
    val, _ = _one_sided_core(lam, x_arr)
    return _ret(val, scalar)


def eval_majorant_truncated(lam, x):
    """Extremal majorant of type 2*pi; equals the minorant plus sinc^2."""
    lam = _check_lam(lam)
    x_arr, scalar = _as_farray(x)
    val, central = _one_sided_core(lam, x_arr)
    return _ret(val + central, scalar)


def eval_truncated(kind: Kind, lam, x):
    if kind is Kind.BEST:
        return eval_best_truncated(lam, x)
    if kind is Kind.MINORANT:
        return eval_minorant_truncated(lam, x)
    if kind is Kind.MAJORANT:
        return eval_majorant_truncated(lam, x)
    raise ValueError(f"unknown kind {kind!r}")


def eval_odd(kind: Kind, lam, x):
    """Odd-target approximants, built by reflecting the truncated ones.

    The reflections swap the one-sided roles: the odd minorant combines the
    truncated minorant with the reflected majorant, and conversely, so the
    identity eval_odd(majorant, lam, -x) == -eval_odd(minorant, lam, x) holds
    exactly in floating point.
    """
    if kind is Kind.BEST:
        return eval_best_truncated(lam, x) - eval_best_truncated(lam, -np.asarray(x, dtype=float))
    xm = -np.asarray(x, dtype=float)
    if kind is Kind.MINORANT:
        return eval_minorant_truncated(lam, x) - eval_majorant_truncated(lam, xm)
    if kind is Kind.MAJORANT:
        return eval_majorant_truncated(lam, x) - eval_minorant_truncated(lam, xm)
    raise ValueError(f"unknown kind {kind!r}")


def eval_approximant(kind: Kind, parity: Parity, lam, x):
    if parity is Parity.TRUNCATED:
        return eval_truncated(kind, lam, x)
    if parity is Parity.ODD:
        return eval_odd(kind, lam, x)
    raise ValueError(f"unknown parity {parity!r}")


def target_function(parity: Parity, lam, x):
    if parity is Parity.TRUNCATED:
        return truncated_gaussian(lam, x)
    if parity is Parity.ODD:
        return odd_gaussian(lam, x)
    raise ValueError(f"unknown parity {parity!r}")


# ---------------------------------------------------------------------------
# optimal errors
# ---------------------------------------------------------------------------

def error_best(lam) -> ErrorValue:
    """Minimal two-sided L1 gap at type pi; the H profile evaluated at lam."""
    lam = _check_lam(lam)
    return ErrorValue(H_lambda(lam), Kind.BEST)


def error_minorant(lam) -> ErrorValue:
    """Minimal one-sided gap from below: 1/2 + 1/(2 sqrt(lam)) - theta3(0,i lam)/2."""
    lam = _check_lam(lam)
    v = 0.5 + 0.5 / math.sqrt(lam) - 0.5 * theta3(0.0, lam)
    return ErrorValue(v, Kind.MINORANT)


def error_majorant(lam) -> ErrorValue:
    """Minimal one-sided gap from above: theta3(0,i lam)/2 + 1/2 - 1/(2 sqrt(lam))."""
    lam = _check_lam(lam)
    v = 0.5 * theta3(0.0, lam) + 0.5 - 0.5 / math.sqrt(lam)
    return ErrorValue(v, Kind.MAJORANT)


def error_truncated(kind: Kind, lam) -> ErrorValue:
    if kind is Kind.BEST:
        return error_best(lam)
    if kind is Kind.MINORANT:
        return error_minorant(lam)
    if kind is Kind.MAJORANT:
        return error_majorant(lam)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# approximant objects and dilation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Approximant:
    """An extremal approximant of type pi*delta (best) or 2*pi*delta.

    `lam` names the target Gaussian; evaluation composes the unit-type series
    at parameter lam/delta^2 with the dilation x -> delta*x, so interpolation
    happens on the shrunken lattice Z/delta minus the origin.
    """

    kind: Kind
    parity: Parity
    lam: float
    delta: float = 1.0

    def __post_init__(self):
        if not self.lam > 0.0:
            raise DomainError("Approximant requires lam > 0")
        if not self.delta > 0.0:
            raise DomainError("Approximant requires delta > 0")

    @property
    def base_lam(self) -> float:
        return self.lam / (self.delta * self.delta)

    def evaluate(self, x):
        y = np.asarray(x, dtype=float) * self.delta
        out = eval_approximant(self.kind, self.parity, self.base_lam, y)
        return out if np.ndim(x) else float(out)

    def target(self, x):
        return target_function(self.parity, self.lam, x)

    def error(self) -> ErrorValue:
        base = error_truncated(self.kind, self.base_lam).value
        if self.parity is Parity.ODD:
            if self.kind is Kind.BEST:
                base = 2.0 * base
            else:
                # reflection pairs the two one-sided gaps; their sum is 1
                base = error_minorant(self.base_lam).value + error_majorant(self.base_lam).value
        return ErrorValue(base / self.delta, self.kind)


def dilate(a: Approximant, delta: float) -> Approximant:
    """Rescale an approximant to delta times its exponential type.

    The target parameter scales by delta^2 and L1 errors scale by 1/delta,
    both by the change of variables x -> delta*x in the defining integral.
    """
    delta = float(delta)
    if not delta > 0.0:
        raise DomainError("dilate requires delta > 0")
    if delta == 1.0:
        return a
    return Approximant(a.kind, a.parity, a.lam * delta * delta, a.delta * delta)


# ---------------------------------------------------------------------------
# L1 distances beyond a finite window
#
# The residuals against the truncated Gaussian decay like 1/x^2, not like a
# Gaussian, so direct windowed quadrature cannot reach 1e-7 absolute accuracy
# in reasonable time.  Beyond an integer cutoff W the approximant series have
# elementary antiderivatives termwise, and the oscillating factors reduce to
# their mean plus endpoint corrections:
#   int_W^inf |sin(pi x)| u(x) dx = (2/pi) int u + (u'(W)/pi^3)(2 - pi^2/6) + ...
#   int_W^inf sin^2(pi x) F(x) dx = (1/2) int F + F'(W)/(8 pi^2) + ...
# with remainders of order of the third derivative at W.
# ---------------------------------------------------------------------------

_ABS_SIN_C = 2.0 - PI * PI / 6.0  # sum over k of 1/(k^2 (4k^2 - 1))


def _tail_terms(lam: float):
    nmax = max(2, int(math.ceil(math.sqrt(math.log(1e22) / (PI * lam)))) + 1)
    n = np.arange(1, nmax + 1, dtype=float)
    g = np.exp(-PI * lam * n * n)
    gp = -2.0 * PI * lam * n * g
    sgn = np.where(np.mod(n, 2.0) == 0.0, 1.0, -1.0)  # (-1)^n
    return n, g, gp, sgn


def l1_tail(kind: Kind, lam: float, cutoff: int):
    """Closed-form tail of the target/approximant L1 gap beyond |x| > cutoff.

    Returns (value, error_bound).  `cutoff` must be an integer comfortably
    past the series support so every translate node lies inside the window.
    """
    lam = _check_lam(lam)
    w = int(cutoff)
    n, g, gp, sgn = _tail_terms(lam)
    if w < int(n[-1]) + 2:
        raise ValueError(f"cutoff {w} too small for lam={lam}; need > {int(n[-1]) + 2}")
    gauss_tail = math.erfc(math.sqrt(PI * lam) * w) / (2.0 * math.sqrt(lam))

    if kind is Kind.BEST:
        # residual envelope u = -S/pi with S(x) = sum (-1)^n n g_n / (x(x-n))
        def s_val(x):
            return float(np.sum(sgn * n * g / (x * (x - n))))

        def s_der(x):
            return float(np.sum(-sgn * n * g * (2.0 * x - n) / (x * x * (x - n) ** 2)))

        int_right = float(np.sum(-sgn * g * np.log(w / (w - n))))  # int of -S over [W, inf)
        int_left = float(np.sum(-sgn * g * np.log((w + n) / w)))
        t_right = (2.0 / PI) * (int_right / PI) + ((-s_der(w) / PI) / PI**3) * _ABS_SIN_C
        t_left = (2.0 / PI) * (int_left / PI) + ((s_der(-w) / PI) / PI**3) * _ABS_SIN_C
        scale = float(np.sum(n * g))
        bound = 0.05 * scale / w**4 + gauss_tail
        return t_right + t_left, bound

    # one-sided envelope F(x) = sum [ g_n/(x-n)^2 + n gp_n/(x(x-n)) ]
    def f_der(x):
        return float(
            np.sum(-2.0 * g / (x - n) ** 3 - n * gp * (2.0 * x - n) / (x * x * (x - n) ** 2))
        )

    int_f_right = float(np.sum(g / (w - n) + gp * np.log(w / (w - n))))
    int_f_left = float(np.sum(g / (w + n) + gp * np.log((w + n) / w)))
    int_l_right = (0.5 * int_f_right + f_der(w) / (8.0 * PI * PI)) / (PI * PI)
    int_l_left = (0.5 * int_f_left - f_der(-w) / (8.0 * PI * PI)) / (PI * PI)
    scale = float(np.sum(g + n * np.abs(gp)))
    bound = 0.05 * scale / w**4 + gauss_tail
    minorant_tail = -(int_l_right + int_l_left) + gauss_tail

    if kind is Kind.MINORANT:
        return minorant_tail, bound
    if kind is Kind.MAJORANT:
        sinc2_tail = 1.0 / (PI * PI * w) - 1.0 / (2.0 * PI**4 * w**3)
        return -minorant_tail + sinc2_tail, bound + 1.0 / w**5
    raise ValueError(f"unknown kind {kind!r}")


def residual_l1(kind: Kind, lam: float, tol: float = 1e-9, window: int = 60) -> QuadResult:
    """Direct numeric L1 gap: windowed kink-split quadrature plus the series tail."""
    tail, terr = l1_tail(kind, lam, window)

    def f(x):
        return truncated_gaussian(lam, x)

    def g(x):
        return eval_truncated(kind, lam, x)

    return l1_distance(f, g, tol, window=float(window), tail=tail, tail_error=terr)
