"""Adaptive quadrature: 1D line/window integrals, L1 distances, the optimal
two-sided error profile H, and iterated 2D integrals.

The engine is a global-adaptive bisection scheme over panels.  Each panel is
scored with an embedded Gauss-Legendre pair (7 and 15 points): the 15-point
value is kept and |G15 - G7| serves as the panel error estimate.  The worst
panel (largest estimate, ties broken by position) is split until the summed
estimate meets the tolerance.  The refinement path is a pure function of the
inputs, so results are deterministic regardless of how callers parallelize.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .special_fns import theta1_zero

PI = math.pi

_G7_NODES, _G7_WEIGHTS = np.polynomial.legendre.leggauss(7)
_G15_NODES, _G15_WEIGHTS = np.polynomial.legendre.leggauss(15)

_MAX_EVALS = 4_000_000
_MIN_WIDTH_FACTOR = 1e-14


@dataclass(frozen=True)
class QuadResult:
    """Value of an integral with an a-posteriori error estimate."""

    value: float
    abs_error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class HProfile:
    """The optimal two-sided L1 error at one decay parameter."""

    lam: float
    value: float
    method: str  # "substituted" or "direct"


class QuadratureError(RuntimeError):
    """Adaptive refinement did not converge; carries the best estimate."""

    def __init__(self, message: str, best: QuadResult):
        super().__init__(message)
        self.best = best


def _ensure_vectorized(f: Callable) -> Callable:
    probe = np.array([0.12345, 0.6789])
    try:
        out = np.asarray(f(probe), dtype=float)
        if out.shape == probe.shape:
            return f
    except Exception:
        pass

    def wrapped(xs):
        return np.array([float(f(float(v))) for v in np.asarray(xs).ravel()])

    return wrapped


def _panel(fv: Callable, a: float, b: float) -> Tuple[float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    f15 = np.asarray(fv(c + h * _G15_NODES), dtype=float)
    f7 = np.asarray(fv(c + h * _G7_NODES), dtype=float)
    i15 = h * float(_G15_WEIGHTS @ f15)
    i7 = h * float(_G7_WEIGHTS @ f7)
    return i15, abs(i15 - i7)


def integrate(
    f: Callable,
    a: float,
    b: float,
    tol: float = 1e-10,
    points: Optional[Sequence[float]] = None,
) -> QuadResult:
    """Adaptive integral of f over [a, b] to absolute tolerance tol.

    `points` seeds extra initial panel boundaries; callers use it when the
    integrand has features narrower than the first bisection levels would
    resolve (sharp boundary layers, known peaks).  Raises QuadratureError
    (with the best estimate attached) if the panel budget or minimum panel
    width is exhausted first.
    """
    a = float(a)
    b = float(b)
    if not (a < b):
        raise ValueError(f"integrate requires a < b, got [{a}, {b}]")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    fv = _ensure_vectorized(f)
    min_width = _MIN_WIDTH_FACTOR * (abs(a) + abs(b) + 1.0)

    cuts = [a, b]
    if points is not None:
        cuts.extend(p for p in map(float, points) if a < p < b)
    cuts = sorted(set(cuts))
    heap = []
    evals = 0
    for pa, pb in zip(cuts[:-1], cuts[1:]):
        val, err = _panel(fv, pa, pb)
        evals += 22
        # heap entries: (-err, a, b, value, err)
        heap.append((-err, pa, pb, val, err))
    heapq.heapify(heap)
    while True:
        total_err = math.fsum(item[4] for item in heap)
        if total_err <= tol:
            break
        neg_e, pa, pb, pv, pe = heapq.heappop(heap)
        if (pb - pa) <= min_width or evals >= _MAX_EVALS:
            heapq.heappush(heap, (neg_e, pa, pb, pv, pe))
            best = _collect(heap, evals)
            raise QuadratureError(
                f"adaptive refinement stalled on [{pa}, {pb}] "
                f"(estimate {total_err:.3e} > tol {tol:.3e})",
                best,
            )
        mid = 0.5 * (pa + pb)
        v1, e1 = _panel(fv, pa, mid)
        v2, e2 = _panel(fv, mid, pb)
        evals += 44
        heapq.heappush(heap, (-e1, pa, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, pb, v2, e2))
    return _collect(heap, evals)


def _collect(heap, evals: int) -> QuadResult:
    panels = sorted(heap, key=lambda item: item[1])
    value = math.fsum(p[3] for p in panels)
    err = math.fsum(p[4] for p in panels)
    return QuadResult(value, err, evals)


def integrate_line(f: Callable, tol: float = 1e-10, decay_scale: float = 1.0) -> QuadResult:
    """Integral over the whole line of an f with Gaussian decay exp(-pi*s*x^2).

    The window half-width W is chosen so the Gaussian tail bound is below
    tol/10; the tail bound is folded into the reported error estimate.
    """
    s = float(decay_scale)
    if not s > 0.0:
        raise ValueError("decay_scale must be positive")
    w = max(3.0, math.sqrt(math.log(10.0 / tol) / (PI * s)))
    r = integrate(f, -w, w, tol)
    tail = 2.0 * math.exp(-PI * s * w * w)
    return QuadResult(r.value, r.abs_error_estimate + tail, r.evaluations)


def _bisect_roots(fv: Callable, lo: np.ndarray, hi: np.ndarray, flo: np.ndarray) -> np.ndarray:
    lo = lo.copy()
    hi = hi.copy()
    slo = np.sign(flo)
    for _ in range(48):
        mid = 0.5 * (lo + hi)
        fm = np.asarray(fv(mid), dtype=float)
        left = np.sign(fm) == slo
        lo = np.where(left, mid, lo)
        hi = np.where(left, hi, mid)
        if float(np.max(hi - lo)) < 1e-12:
            break
    return 0.5 * (lo + hi)


def l1_distance(
    f: Callable,
    g: Callable,
    tol: float = 1e-9,
    decay_scale: float = 1.0,
    window: Optional[float] = None,
    tail: float = 0.0,
    tail_error: float = 0.0,
) -> QuadResult:
    """Integral of |f - g| over the line.

    The difference is scanned on a 1e-2 grid inside the window; each sign
    change is bisected to ~1e-12 and inserted as a panel boundary, so the
    adaptive rule never straddles a kink of |f - g|.  `window` overrides the
    Gaussian-envelope half-width; callers whose difference decays slower than
    a Gaussian must supply it, together with an analytic `tail` value (added
    to the result) and its `tail_error` bound.
    """
    if window is None:
        window = max(3.0, math.sqrt(math.log(10.0 / tol) / (PI * decay_scale)))
    w = float(window)
    fv = _ensure_vectorized(f)
    gv = _ensure_vectorized(g)

    def dv(xs):
        return np.asarray(fv(xs), dtype=float) - np.asarray(gv(xs), dtype=float)

    n_scan = int(round(2.0 * w / 1e-2)) + 1
    xs = np.linspace(-w, w, n_scan)
    d = dv(xs)
    evals = 2 * n_scan
    flip = d[:-1] * d[1:] < 0.0
    idx = np.nonzero(flip)[0]
    if idx.size:
        roots = _bisect_roots(dv, xs[idx], xs[idx + 1], d[idx])
        evals += 2 * 48 * idx.size
    else:
        roots = np.empty(0)
    # scan points where the difference vanishes exactly (interpolation nodes,
    # typically) are sign-change candidates the product test cannot see
    exact = xs[d == 0.0]
    cuts = np.concatenate(([-w], roots, exact, [w]))
    cuts = np.unique(cuts)
    per_panel_tol = tol / max(1, len(cuts) - 1)
    total = 0.0
    err = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        if b - a <= 1e-12:
            continue
        r = integrate(dv, float(a), float(b), per_panel_tol)
        total += abs(r.value)
        err += r.abs_error_estimate
        evals += r.evaluations
    return QuadResult(total + tail, err + tail_error, evals)


# ---------------------------------------------------------------------------
# the optimal two-sided error profile
# ---------------------------------------------------------------------------

def h_lambda_profile(lam: float, tol: float = 1e-10, method: str = "substituted") -> HProfile:
    """Optimal two-sided L1 error for the one-sided Gaussian at unit type.

    H(lam) = (1/(pi*lam)) * integral over y in [0,1] of theta1(0, i*(1-y^2)/lam).
    The integrand blows up like (1-y)^(-1/2) at y = 1 because theta1(0, i*s)
    grows like s^(-1/2) as s -> 0; the substitution y = sin(phi) removes the
    blow-up entirely, leaving a bounded smooth integrand on [0, pi/2].
    """
    lam = float(lam)
    if not lam > 0.0:
        raise ValueError("lam must be positive")
    if method == "substituted":

        def integrand(phi):
            c = np.cos(phi)
            return theta1_zero(c * c / lam) * c / (PI * lam)

        r = integrate(integrand, 0.0, PI / 2.0, tol)
    elif method == "direct":

        def integrand(y):
            return theta1_zero((1.0 - y * y) / lam) / (PI * lam)

        r = integrate(integrand, 0.0, 1.0, max(tol, 1e-8))
    else:
        raise ValueError(f"unknown H evaluation method {method!r}")
    return HProfile(lam, r.value, method)


def H_lambda(lam: float, tol: float = 1e-10) -> float:
    """Value of the optimal two-sided L1 error profile at lam."""
    return h_lambda_profile(lam, tol=tol, method="substituted").value


# ---------------------------------------------------------------------------
# iterated 2D quadrature
# ---------------------------------------------------------------------------

def integrate_2d(
    f: Callable,
    region: Sequence[Sequence[float]],
    tol: float = 1e-8,
) -> QuadResult:
    """Iterated adaptive integral of f(t, u) over a finite rectangle.

    `region` is ((t_lo, t_hi), (u_lo, u_hi)).  The tolerance is split evenly
    between the two axes; the inner integrand must be vectorized in u for a
    fixed t.  Callers are expected to window infinite regions themselves using
    the Gaussian decay of their integrands.
    """
    (ta, tb), (ua, ub) = region
    ta, tb, ua, ub = map(float, (ta, tb, ua, ub))
    if not (ta < tb and ua < ub):
        raise ValueError("integrate_2d requires non-degenerate finite rectangles")
    for v in (ta, tb, ua, ub):
        if not math.isfinite(v):
            raise ValueError("integrate_2d requires finite windows")
    inner_tol = 0.5 * tol / max(1.0, tb - ta)
    outer_tol = 0.5 * tol
    evals = 0

    def marginal(t: float) -> float:
        nonlocal evals
        r = integrate(lambda u: f(t, u), ua, ub, inner_tol)
        evals += r.evaluations
        return r.value

    def outer(ts):
        return np.array([marginal(float(t)) for t in np.asarray(ts).ravel()])

    r = integrate(outer, ta, tb, outer_tol)
    return QuadResult(r.value, r.abs_error_estimate + inner_tol * (tb - ta), evals + r.evaluations)
