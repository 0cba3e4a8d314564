"""Rate fits (power laws, log slopes, 1/t limits) and bracket verdicts."""
from dataclasses import asdict, dataclass, field
import json
import math

import numpy as np

from .errors import InsufficientSamples

__all__ = [
    "RateReport",
    "fit_power_law",
    "fit_log_slope",
    "harmonic_rate",
    "theorem_verdicts",
    "hyperbolic_lower_bound",
    "lemma41_consistent",
    "DEFAULT_EPS",
    "DEFAULT_TOL",
]

DEFAULT_EPS = 0.05
DEFAULT_TOL = 0.02
MIN_SAMPLES = 10


@dataclass
class RateReport:
    kind: str  # euclid-exponent | hyp-log-slope | harmonic-rate
    slope: float
    intercept: float
    r_squared: float
    window: tuple
    bracket: tuple | None = None
    verdict: str = "not-applicable"
    tol: float = DEFAULT_TOL
    label: str = ""
    extras: dict = field(default_factory=dict)

    def judge(self, bracket, tol=None):
        """Attach ``bracket`` and set the verdict (``within`` iff slope in ``[lo - tol, hi + tol]``)."""
        if tol is not None:
            self.tol = float(tol)
        if bracket is None:
            self.bracket, self.verdict = None, "not-applicable"
            return self
        lo, hi = float(bracket[0]), float(bracket[1])
        self.bracket = (lo, hi)
        ok = math.isfinite(self.slope) and lo - self.tol <= self.slope <= hi + self.tol
        self.verdict = "within" if ok else "outside"
        return self

    @property
    def constant(self):
        """Prefactor ``c`` of ``c t^{-slope}`` (Euclidean fits only)."""
        return math.exp(self.intercept)

    def to_dict(self):
        d = asdict(self)
        d["window"] = list(self.window)
        d["bracket"] = None if self.bracket is None else list(self.bracket)
        return d

    def to_json(self):
        return json.dumps(self.to_dict())


def _window(ts, ys, window, positive=True):
    ts = np.asarray(ts, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if ts.shape != ys.shape:
        raise ValueError("ts and ys differ in length")
    lo, hi = (ts[ts > 0].min(), ts.max()) if window is None else window
    m = (ts >= lo) & (ts <= hi) & (ts > 0)
    if positive:
        m &= ys > 0
    if m.sum() < MIN_SAMPLES:
        raise InsufficientSamples(f"{int(m.sum())} samples in window [{lo:g}, {hi:g}]; need {MIN_SAMPLES}")
    return ts[m], ys[m], (float(lo), float(hi))


def _ols(x, y):
    A = np.vstack([x, np.ones_like(x)]).T
    (slope, icpt), *_ = np.linalg.lstsq(A, y, rcond=None)
    fit = slope * x + icpt
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    ss_res = float(np.sum((y - fit) ** 2))
    r2 = 1.0 if ss_tot == 0 else max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return float(slope), float(icpt), r2


def fit_power_law(ts, ys, window=None):
    """Fit ``y = c t^{-alpha}``; ``slope`` is ``alpha`` (positive for decay), ``intercept`` is ``log c``."""
    t, y, win = _window(ts, ys, window)
    s, b, r2 = _ols(np.log(t), np.log(y))
    return RateReport("euclid-exponent", -s, b, r2, win)


def fit_log_slope(ts, ds, window=None, theta=None):
    """Fit ``d = a log t + b``; with ``theta`` the bracket ``[1, (pi+theta)/(2 theta)]`` is attached."""
    t, d, win = _window(ts, ds, window, positive=False)
    s, b, r2 = _ols(np.log(t), d)
    rep = RateReport("hyp-log-slope", s, b, r2, win)
    if theta is not None and theta > 0:
        rep.judge((1.0, (math.pi + theta) / (2.0 * theta)))
    return rep


def harmonic_rate(ts, omegas, dist=None, theta=None, tol=0.01):
    """Limit of ``t * omega`` from an OLS fit of ``omega`` against ``1/t``.

    ``slope`` is the extrapolated limit; ``extras['max_t_omega']`` the largest sampled ``t * omega``.
    With ``dist`` and ``theta`` the bracket ``[0, dist/theta]`` is attached.
    """
    ts = np.asarray(ts, dtype=float)
    vals = np.array([getattr(o, "value", o) for o in omegas], dtype=float)
    if len(ts) != len(vals):
        raise ValueError("ts and omegas differ in length")
    if len(ts) < 3:
        raise InsufficientSamples("need at least 3 harmonic samples")
    s, b, r2 = _ols(1.0 / ts, vals)
    rep = RateReport("harmonic-rate", s, b, r2, (float(ts.min()), float(ts.max())), tol=tol)
    rep.extras["max_t_omega"] = float(np.max(ts * vals))
    if dist is not None and theta is not None:
        rep.judge((0.0, dist / theta) if theta > 0 else (0.0, math.inf))
    return rep


def hyperbolic_lower_bound(model, trace):
    """Pointwise ``log t - log(dist(h(z0), boundary of the half-plane H_rho))`` (nan at t = 0)."""
    h0 = complex(trace.h_values[0])
    gap = h0.imag - model.halfplane_rho if model.orientation == "upper" else model.halfplane_rho - h0.imag
    with np.errstate(divide="ignore"):
        out = np.log(trace.t) - math.log(gap)
    out[trace.t <= 0] = np.nan
    return out


def lemma41_consistent(euclid, hyp, slack=0.05):
    """``a <= alpha <= 2a + slack`` for Euclidean exponent ``alpha`` and hyperbolic slope ``a``."""
    a, alpha = hyp.slope, euclid.slope
    return bool(a <= alpha + DEFAULT_TOL and alpha <= 2 * a + slack)


def theorem_verdicts(model, trace, eps=DEFAULT_EPS, window=None, tol=DEFAULT_TOL, harmonic=None):
    """Bracket checks for the fitted rates of ``trace``.

    * finite shift: Euclidean exponent in ``[1, 1 + eps]``
    * infinite shift: Euclidean exponent in ``[1, (pi + Theta)/Theta + eps]``
    * all: hyperbolic log slope in ``[1, (pi + Theta)/(2 Theta) + eps]``
    * ``harmonic=(ts, omegas, dist)``: limit of ``t omega`` in ``[0, dist/Theta]``
    """
    if window is None:
        window = (1e3, float(trace.t[-1]))
    theta = model.inner_argument
    out = []
    eu = fit_power_law(trace.t, trace.eucl_to_dw, window)
    eu.tol = tol
    if model.shift_type == "finite":
        eu.judge((1.0, 1.0 + eps))
        eu.label = "Theorem 1.1 (finite shift): c1/t^(1+eps) <= |phi_t(z)-tau| <= c2/t"
    else:
        eu.judge((1.0, (math.pi + theta) / theta + eps) if theta > 0 else None)
        eu.label = "Theorem 1.3 (positive hyperbolic step, infinite shift): Euclidean exponent bracket"
    eu.extras["eps"] = eps
    out.append(eu)

    hy = fit_log_slope(trace.t, trace.hyp_from_start, window)
    hy.tol = tol
    hy.judge((1.0, (math.pi + theta) / (2.0 * theta) + eps) if theta > 0 else None)
    hy.label = "Theorem 1.2 / Corollary 4.1: log t - c2 <= d(z, phi_t z) <= ((pi+Theta)/(2 Theta)+eps) log t + c1"
    hy.extras["eps"] = eps
    out.append(hy)

    if harmonic is not None:
        ts, omegas, dist = harmonic
        hr = harmonic_rate(ts, omegas, dist=dist, theta=theta)
        hr.label = "Theorem 1.4: limsup t * omega(phi_t(z), E, D) <= dist(h(z), boundary)/Theta"
        out.append(hr)
    return out
