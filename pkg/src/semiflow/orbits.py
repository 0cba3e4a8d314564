"""Orbits ``phi_t(z) = h^{-1}(h(z) + t)`` by damped Newton with continuation in t.

Newton runs in the model's half-plane coordinate ``u`` (see :mod:`semiflow.models`),
where the Denjoy-Wolff point sits at infinity. All metrics are computed from
``u`` directly:

* ``|phi_t - 1| = 2/|u + i|``
* horodisk parameter ``|1 - phi_t|^2/(1 - |phi_t|^2) = 1/Im u``
* ``d_D(z, phi_t(z)) = d_H(u_0, u_t)``

so nothing is lost when disk points crowd against ``tau = 1``.
"""
from dataclasses import dataclass, field
import csv
import io
import json
import math

import numpy as np

from .complexcore import as_point, dw_distance_from_halfplane
from .errors import CapabilityError, DomainError, DomainEscape, NoConvergence
from .hypgeo import dist_halfplane

__all__ = [
    "TimeGrid",
    "OrbitTrace",
    "koenigs_invert",
    "flow",
    "orbit_trace",
    "lemma41_check",
    "semigroup_property_check",
    "trace_to_csv",
    "trace_to_json",
    "CSV_COLUMNS",
]

MAX_NEWTON = 50
MAX_HALVINGS = 30
CSV_COLUMNS = (
    "t", "re", "im", "disk_re", "disk_im",
    "eucl_to_dw", "hyp_from_start", "horodisk_param", "h_re", "h_im",
)


@dataclass(frozen=True)
class TimeGrid:
    """Geometric grid ``t0 ... t1`` with ``count`` samples; ``times()`` prepends t = 0."""

    t0: float
    t1: float
    count: int
    kind: str = "geometric"

    def __post_init__(self):
        if self.kind != "geometric":
            raise ValueError("only geometric grids are supported")
        if not (0 < self.t0 < self.t1) or not math.isfinite(self.t1):
            raise ValueError("need 0 < t0 < t1 < inf")
        if int(self.count) < 2:
            raise ValueError("count must be >= 2")

    def samples(self):
        return self.t0 * (self.t1 / self.t0) ** (np.arange(self.count) / (self.count - 1))

    def times(self):
        return np.concatenate([[0.0], self.samples()])


@dataclass
class OrbitTrace:
    model_id: str
    z0: complex
    grid: TimeGrid
    t: np.ndarray
    points: np.ndarray
    disk_points: np.ndarray
    h_values: np.ndarray
    eucl_to_dw: np.ndarray
    hyp_from_start: np.ndarray
    horodisk_param: np.ndarray
    hp_points: np.ndarray = field(repr=False, default=None)

    def __len__(self):
        return len(self.t)

    def linearization_residual(self):
        return np.abs(self.h_values - (self.h_values[0] + self.t))


# ---------------------------------------------------------------------------
# Newton


def _residual(model, u, target):
    try:
        val = model.hp_koenigs(u)
    except (DomainError, NoConvergence, ValueError, ZeroDivisionError):
        return None, math.inf
    return val, abs(val - target)


def _newton_u(model, target, u, tol_scale=1e-12):
    """Solve ``K(u) = target`` for ``u`` in the upper half-plane."""
    target = complex(target)
    tol = tol_scale * (1.0 + abs(target))
    val, res = _residual(model, u, target)
    if not math.isfinite(res):
        raise DomainEscape("Newton start point is not admissible")
    for _ in range(MAX_NEWTON):
        if res <= tol:
            break
        step = (val - target) / model.hp_koenigs_derivative(u)
        lam = 1.0
        for _ in range(MAX_HALVINGS):
            cand = u - lam * step
            if cand.imag > 0:
                cval, cres = _residual(model, cand, target)
                if cres < res:
                    u, val, res = cand, cval, cres
                    break
            lam *= 0.5
        else:
            raise DomainEscape("damping could not keep Newton inside the parameter domain")
    else:
        raise NoConvergence(f"Newton did not reach tolerance (residual {res:.3e})")
    # one polishing step: brings the root to rounding level, which keeps
    # results independent of the continuation path
    cand = u - (val - target) / model.hp_koenigs_derivative(u)
    if cand.imag > 0:
        cval, cres = _residual(model, cand, target)
        if cres <= res:
            u, val = cand, cval
    return u, val


def _continue(model, u_prev, k_prev, target):
    """Newton from a tangent predictor at ``u_prev`` (falls back to ``u_prev``)."""
    guess = u_prev
    try:
        pred = u_prev + (target - k_prev) / model.hp_koenigs_derivative(u_prev)
        if pred.imag > 0 and math.isfinite(abs(pred)):
            guess = pred
    except (ZeroDivisionError, DomainError):
        pass
    try:
        return _newton_u(model, target, guess)
    except NoConvergence:
        if guess is u_prev:
            raise
        return _newton_u(model, target, u_prev)


def koenigs_invert(model, target, warm_start=None):
    """Point ``z`` of the parameter domain with ``h(z) = target``, by damped Newton from ``warm_start``."""
    model._require_orbit()
    target = as_point(target, "target")
    if not model.omega_contains(target):
        raise DomainError(f"target {target!r} is not in the Koenigs domain of {model.id!r}")
    z = model.base_point if warm_start is None else warm_start
    u, _ = _newton_u(model, target, model.to_halfplane(z))
    return model.from_halfplane(u)


def _flow_u(model, u0, h0, t, growth=1.5):
    """Continue from ``(u0, h0)`` to ``h0 + t`` through geometric intermediate times."""
    if t == 0:
        return u0, h0
    s = min(1.0, t)
    u, k = u0, h0
    while True:
        u, k = _continue(model, u, k, h0 + s)
        if s >= t:
            return u, k
        s = min(t, s * growth)


def flow(model, z, t):
    """``phi_t(z)`` for a single time, with internal continuation."""
    model._require_orbit()
    if t < 0:
        raise ValueError("t must be >= 0")
    u0 = model.to_halfplane(z)
    if t == 0:
        return complex(z)
    u, _ = _flow_u(model, u0, model.hp_koenigs(u0), float(t))
    return model.from_halfplane(u)


def orbit_trace(model, z0, grid):
    """Sample the forward orbit of ``z0`` on ``grid.times()`` (t = 0 first)."""
    model._require_orbit()
    z0 = as_point(z0, "z0")
    u0 = model.to_halfplane(z0)
    h0 = model.hp_koenigs(u0)
    ts = grid.times()
    us = np.empty(len(ts), dtype=complex)
    hs = np.empty(len(ts), dtype=complex)
    us[0], hs[0] = u0, h0
    u, k = u0, h0
    for i in range(1, len(ts)):
        try:
            # sub-steps keep each Newton solve inside its basin for coarse grids
            u, k = _flow_u(model, u, k, ts[i] - ts[i - 1]) if ts[i - 1] == 0 else _step(model, u, k, h0, ts[i - 1], ts[i])
        except NoConvergence as exc:
            exc.t = float(ts[i])
            raise
        us[i], hs[i] = u, k
    return _build_trace(model, z0, grid, ts, us, hs)


def _step(model, u, k, h0, t_prev, t_next, max_ratio=1.5):
    s = t_prev
    while s < t_next:
        s = min(t_next, s * max_ratio)
        u, k = _continue(model, u, k, h0 + s)
    return u, k


def _build_trace(model, z0, grid, ts, us, hs):
    disk = np.array([model.from_halfplane(u) if model.parameter_domain == "disk" else (u - 1j) / (u + 1j) for u in us])
    points = disk if model.parameter_domain == "disk" else us.copy()
    points[0] = z0
    eucl = np.array([dw_distance_from_halfplane(u) for u in us])
    hyp = np.array([dist_halfplane(us[0], u, 0.0, "upper") for u in us])
    horo = 1.0 / us.imag
    return OrbitTrace(model.id, z0, grid, ts, points, disk, hs, eucl, hyp, horo, us)


# ---------------------------------------------------------------------------
# checks


def lemma41_check(trace, model, slack=1e-9):
    """Per-sample truth of ``(1-|z|)/(1+|z|) e^{-2d} <= |phi_t - tau| <= 2|tau-z|/(1-|z|) e^{-d}``."""
    if model.shift_type != "infinite":
        raise CapabilityError("the two-sided Euclidean/hyperbolic sandwich needs an infinite-shift model")
    z = complex(trace.disk_points[0])
    r = abs(z)
    d = np.asarray(trace.hyp_from_start, dtype=float)
    e = np.asarray(trace.eucl_to_dw, dtype=float)
    lower = (1 - r) / (1 + r) * np.exp(-2 * d)
    upper = 2 * abs(1 - z) / (1 - r) * np.exp(-d)
    return (lower <= e + slack) & (e <= upper + slack)


def semigroup_property_check(model, z0, s, t):
    """``|phi_{t+s}(z0) - phi_t(phi_s(z0))|`` from two independent continuation paths."""
    one = flow(model, z0, s + t)
    two = flow(model, flow(model, z0, s), t)
    return abs(one - two)


# ---------------------------------------------------------------------------
# serialization


def _g(x):
    return format(float(x), ".17g")


def trace_rows(trace):
    for k in range(len(trace.t)):
        p, q, h = complex(trace.points[k]), complex(trace.disk_points[k]), complex(trace.h_values[k])
        yield [
            _g(trace.t[k]), _g(p.real), _g(p.imag), _g(q.real), _g(q.imag),
            _g(trace.eucl_to_dw[k]), _g(trace.hyp_from_start[k]), _g(trace.horodisk_param[k]),
            _g(h.real), _g(h.imag),
        ]


def trace_to_csv(trace, fh=None):
    """Write the trace as CSV (17 significant digits); returns the text when ``fh`` is None."""
    buf = io.StringIO() if fh is None else fh
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    w.writerows(trace_rows(trace))
    return buf.getvalue() if fh is None else None


def trace_to_json(trace):
    rows = [dict(zip(CSV_COLUMNS, map(float, r))) for r in trace_rows(trace)]
    doc = {
        "model_id": trace.model_id,
        "z0": [float(complex(trace.z0).real), float(complex(trace.z0).imag)],
        "grid": {"kind": trace.grid.kind, "t0": trace.grid.t0, "t1": trace.grid.t1, "count": trace.grid.count},
        "samples": rows,
    }
    return json.dumps(doc, indent=1)
