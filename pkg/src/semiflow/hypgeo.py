"""Closed-form hyperbolic geometry: disk, horizontal half-planes, horizontal sectors, horodisks.

All distance formulas are evaluated as ``0.5 * log1p(B (A + B) / (A^2 - B^2))``
where ``A^2 - B^2`` is known in product form, so points far apart (or close to
the boundary) keep full relative precision.
"""
from dataclasses import dataclass
import math

import numpy as np

from .complexcore import as_point, complex_pow, principal_arg
from .errors import DomainError

__all__ = [
    "Horodisk",
    "SectorSpec",
    "dist_disk",
    "dist_halfplane",
    "dist_sector",
    "hyperbolic_length_disk",
    "horodisk_parameter",
]

_COINCIDENT = 1e-15


def _check_orientation(orientation):
    if orientation not in ("upper", "lower"):
        raise ValueError(f"orientation must be 'upper' or 'lower', got {orientation!r}")


@dataclass(frozen=True)
class Horodisk:
    """``E(tau, R) = {z : |tau - z|^2 / (1 - |z|^2) < R}``."""

    tau: complex
    R: float

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError("horodisk parameter R must be positive")
        if abs(abs(complex(self.tau)) - 1.0) > 1e-12:
            raise ValueError("contact point must lie on the unit circle")

    @property
    def radius(self):
        return self.R / (self.R + 1.0)

    @property
    def center(self):
        return complex(self.tau) / (self.R + 1.0)

    def contains(self, z):
        return horodisk_parameter(z, self.tau) < self.R


@dataclass(frozen=True)
class SectorSpec:
    """Horizontal angular sector ``apex + S_theta`` (upper) or ``apex + S_theta^-`` (lower)."""

    apex: complex
    theta: float
    orientation: str = "upper"

    def __post_init__(self):
        if not 0.0 < self.theta <= math.pi:
            raise ValueError(f"theta must lie in (0, pi], got {self.theta!r}")
        _check_orientation(self.orientation)

    def contains(self, z):
        v = complex(z) - complex(self.apex)
        if v == 0:
            return False
        if self.orientation == "lower":
            v = v.conjugate()
        a = principal_arg(v)
        return 0.0 < a < self.theta


def dist_disk(z, w):
    """Hyperbolic distance in the unit disk (density ``1/(1-|z|^2)``)."""
    z = as_point(z)
    w = as_point(w, "w")
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise DomainError("points must lie in the open unit disk")
    b = abs(z - w)
    if b < _COINCIDENT * (1.0 + abs(z)):
        return 0.0
    a = abs(1.0 - z.conjugate() * w)
    prod = (1.0 - abs(z)) * (1.0 + abs(z)) * (1.0 - abs(w)) * (1.0 + abs(w))
    return 0.5 * math.log1p(2.0 * b * (a + b) / prod)


def _dist_upper(z, w, rho):
    y1 = z.imag - rho
    y2 = w.imag - rho
    if y1 <= 0 or y2 <= 0:
        raise DomainError("points must lie strictly inside the half-plane")
    b = abs(z - w)
    if b < _COINCIDENT * (1.0 + abs(z)):
        return 0.0
    a = abs(z - w.conjugate() - 2j * rho)
    return 0.5 * math.log1p(b * (a + b) / (2.0 * y1 * y2))


def dist_halfplane(z, w, rho=0.0, orientation="upper"):
    """Distance in ``H_rho = {Im > rho}`` or, for ``orientation='lower'``, in ``{Im < rho}``."""
    _check_orientation(orientation)
    z = as_point(z)
    w = as_point(w, "w")
    rho = float(rho)
    if orientation == "lower":
        return _dist_upper(z.conjugate(), w.conjugate(), -rho)
    return _dist_upper(z, w, rho)


def dist_sector(z, w, spec):
    """Distance in the horizontal sector described by ``spec`` via the ``pi/theta`` power map."""
    z = as_point(z)
    w = as_point(w, "w")
    if not (spec.contains(z) and spec.contains(w)):
        raise DomainError("points must lie strictly inside the sector")
    u = z - complex(spec.apex)
    v = w - complex(spec.apex)
    if spec.orientation == "lower":
        u, v = u.conjugate(), v.conjugate()
    if abs(u - v) < _COINCIDENT * (1.0 + abs(z)):
        return 0.0
    p = math.pi / spec.theta
    zp = complex_pow(u, p)
    wp = complex_pow(v, p)
    b = abs(zp - wp)
    a = abs(zp - wp.conjugate())
    # a^2 - b^2 = 4 Im(zp) Im(wp)
    denom = 2.0 * zp.imag * wp.imag
    if denom <= 0:
        raise DomainError("power image left the upper half-plane (point on the sector edge)")
    return 0.5 * math.log1p(b * (a + b) / denom)


def hyperbolic_length_disk(polyline, subdivisions=1):
    """Midpoint-rule hyperbolic length of a polyline in the disk.

    Each segment is split into ``subdivisions`` equal pieces and the density
    ``1/(1-|z|^2)`` is sampled at their midpoints.
    """
    pts = np.asarray([as_point(p) for p in polyline], dtype=complex)
    if np.any(np.abs(pts) >= 1.0):
        raise DomainError("polyline vertex outside the open unit disk")
    if len(pts) < 2:
        return 0.0
    n = int(subdivisions)
    if n < 1:
        raise ValueError("subdivisions must be >= 1")
    a = pts[:-1, None]
    d = (pts[1:] - pts[:-1])[:, None]
    s = (np.arange(n) + 0.5) / n
    mid = a + d * s[None, :]
    r = np.abs(mid)
    dens = 1.0 / ((1.0 - r) * (1.0 + r))
    return float(np.sum(dens * np.abs(d) / n))


def horodisk_parameter(z, tau=1.0):
    """``|tau - z|^2 / (1 - |z|^2)``; equals 1 at the origin."""
    z = as_point(z)
    tau = as_point(tau, "tau")
    r = abs(z)
    if r >= 1.0:
        raise DomainError("z must lie in the open unit disk")
    return abs(tau - z) ** 2 / ((1.0 - r) * (1.0 + r))
