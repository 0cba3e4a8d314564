"""Catalog of concrete semigroup models and the sector-inclusion probe.

Every orbit-capable model is evaluated internally in a *half-plane
coordinate* ``u`` in the upper half-plane with the Denjoy-Wolff point at
``u = infinity``. For the disk models ``u = i(1+z)/(1-z)``; for the comb
model the parameter domain already is the upper half-plane and ``u = z``.
Working in ``u`` keeps full precision for orbit points that crowd against
``tau = 1`` in disk coordinates.
"""
from dataclasses import dataclass
from functools import lru_cache
import cmath
import math

import numpy as np

from . import comb
from .complexcore import as_point, cayley_disk_to_halfplane, cayley_halfplane_to_disk
from .errors import CapabilityError, DomainError, NoConvergence
from .hypgeo import SectorSpec

__all__ = [
    "SemigroupModel",
    "ProbeResult",
    "model_catalog",
    "get_model",
    "koenigs_eval",
    "koenigs_derivative_eval",
    "omega_contains",
    "sector_inclusion_probe",
    "inner_argument_estimate",
    "slit_root",
    "MODEL_IDS",
]

MODEL_IDS = ("halfplane", "sector", "comb", "slit", "slit-mid", "dyadic-comb")
_E_PI4 = cmath.exp(0.25j * math.pi)


class SemigroupModel:
    """A non-elliptic semigroup given by its Koenigs map ``h`` and Koenigs domain ``Omega``.

    Subclasses fill in the metadata and the half-plane coordinate form of ``h``.
    """

    id = ""
    parameter_domain = "disk"  # or "upper-half-plane"
    base_point = 0j
    dw_point = 1 + 0j  # None stands for infinity (half-plane parameter domain)
    shift_type = "finite"
    inner_argument = math.pi
    halfplane_rho = 0.0
    orientation = "upper"
    has_orbit = True

    def __repr__(self):
        return f"<{type(self).__name__} {self.id!r}>"

    @property
    def capabilities(self):
        return "orbit" if self.has_orbit else "geometry-only"

    # -- parameter domain <-> half-plane coordinate ------------------------------
    def in_parameter_domain(self, z):
        z = complex(z)
        if self.parameter_domain == "disk":
            return abs(z) < 1.0
        return z.imag > 0.0

    def to_halfplane(self, z):
        z = as_point(z)
        if not self.in_parameter_domain(z):
            raise DomainError(f"{z!r} is outside the {self.parameter_domain} of model {self.id!r}")
        if self.parameter_domain == "disk":
            return cayley_disk_to_halfplane(z, 1.0)
        return z

    def from_halfplane(self, u):
        if self.parameter_domain == "disk":
            return cayley_halfplane_to_disk(u, 1.0)
        return complex(u)

    def _halfplane_jacobian(self, z):
        # du/dz for u = i(1+z)/(1-z)
        if self.parameter_domain == "disk":
            return 2j / (1.0 - z) ** 2
        return 1.0

    # -- Koenigs map ----------------------------------------------------------
    def _require_orbit(self):
        if not self.has_orbit:
            raise CapabilityError(f"model {self.id!r} is geometry-only (no Koenigs map)")

    def hp_koenigs(self, u):
        raise NotImplementedError

    def hp_koenigs_derivative(self, u):
        raise NotImplementedError

    def koenigs(self, z):
        self._require_orbit()
        return self.hp_koenigs(self.to_halfplane(z))

    def koenigs_derivative(self, z):
        self._require_orbit()
        u = self.to_halfplane(z)
        return self.hp_koenigs_derivative(u) * self._halfplane_jacobian(complex(z))

    # -- Koenigs domain ---------------------------------------------------------
    def omega_contains(self, w):
        raise NotImplementedError

    def horizontal_pieces(self, lo, hi):
        """Horizontal boundary pieces ``(height, x_lo, x_hi)`` with ``lo <= height <= hi``."""
        return []


class HalfPlaneModel(SemigroupModel):
    id = "halfplane"
    halfplane_rho = -1.0

    def hp_koenigs(self, u):
        # 2iz/(1-z) = u - i
        return complex(u) - 1j

    def hp_koenigs_derivative(self, u):
        return 1.0 + 0j

    def omega_contains(self, w):
        return complex(w).imag > -1.0

    def horizontal_pieces(self, lo, hi):
        return [(-1.0, -math.inf, math.inf)] if lo <= -1.0 <= hi else []


class SectorModel(SemigroupModel):
    """Quarter-plane ``{0 < Arg w < pi/2} - e^{i pi/4}``."""

    id = "sector"
    shift_type = "infinite"
    inner_argument = 0.5 * math.pi
    halfplane_rho = -math.sin(0.25 * math.pi)

    def hp_koenigs(self, u):
        return cmath.sqrt(complex(u)) - _E_PI4

    def hp_koenigs_derivative(self, u):
        return 0.5 / cmath.sqrt(complex(u))

    def omega_contains(self, w):
        v = complex(w) + _E_PI4
        return v.real > 0.0 and v.imag > 0.0

    def horizontal_pieces(self, lo, hi):
        c = -_E_PI4.imag
        return [(c, -_E_PI4.real, math.inf)] if lo <= c <= hi else []


def slit_root(guess=-0.3 + 1.4j, tol=1e-13, max_iter=50):
    """Root ``w0`` of ``w + log w - i pi = 0`` in the upper half-plane (Newton)."""
    w = complex(guess)
    for _ in range(max_iter):
        r = w + cmath.log(w) - 1j * math.pi
        if abs(r) < tol:
            # one more step takes the root to rounding level
            return w - r / (1.0 + 1.0 / w)
        w -= r / (1.0 + 1.0 / w)
    raise NoConvergence("Newton for w + log w = i pi did not converge")


class SlitModel(SemigroupModel):
    """``h = f o C`` with ``f(w) = w + log w - i pi`` and ``C`` the disk-to-H map with ``C(0) = w0``.

    ``C(z) = Re w0 + Im w0 * i(1+z)/(1-z)`` is the Mobius map of the disk onto
    the upper half-plane sending 0 to ``w0`` and 1 to infinity. Its image
    under ``f`` is ``{Im w > -pi}`` minus the slit ``{Im w = 0, Re w <= -1}``.
    """

    id = "slit"
    halfplane_rho = -math.pi

    def __init__(self):
        self.w0 = slit_root()

    def _zeta(self, u):
        return self.w0.real + self.w0.imag * complex(u)

    def hp_koenigs(self, u):
        zeta = self._zeta(u)
        return zeta + cmath.log(zeta) - 1j * math.pi

    def hp_koenigs_derivative(self, u):
        return self.w0.imag * (1.0 + 1.0 / self._zeta(u))

    def omega_contains(self, w):
        w = complex(w)
        if not w.imag > -math.pi:
            return False
        return not (w.imag == 0.0 and w.real <= -1.0)

    def horizontal_pieces(self, lo, hi):
        out = []
        if lo <= -math.pi <= hi:
            out.append((-math.pi, -math.inf, math.inf))
        if lo <= 0.0 <= hi:
            out.append((0.0, -math.inf, -1.0))
        return out


class CombModel(SemigroupModel):
    """``h(z) = sum_n (1/n) log((n-z)/(n-i)) - z`` on the upper half-plane.

    The Koenigs domain is ``{Im w < y}`` minus the slits
    ``{Im w = y - pi H_m, Re w <= Re h(k_m)}`` with ``H_m`` the harmonic numbers,
    ``y = sum_n arctan(1/n)/n`` and ``k_m`` the critical point of ``h`` in ``(m, m+1)``.
    """

    id = "comb"
    parameter_domain = "upper-half-plane"
    base_point = 1j
    dw_point = None
    orientation = "lower"
    max_slits = 4000
    # beyond this index tips are not computed; Re h(k_m) = -m + O(log^2 m) and
    # Re h(k_m) < -0.9 m already for m >= 100 (checked up to m = 1e5)
    exact_tip_max = 100_000

    def __init__(self):
        self.halfplane_rho = comb.comb_top_height()

    def hp_koenigs(self, u):
        u = complex(u)
        if not u.imag > 0:
            raise DomainError("comb Koenigs map needs Im z > 0")
        return comb.comb_koenigs(u)

    def hp_koenigs_derivative(self, u):
        u = complex(u)
        if not u.imag > 0:
            raise DomainError("comb Koenigs map needs Im z > 0")
        return comb.comb_koenigs_derivative(u)

    def slit_height(self, m):
        return self.halfplane_rho - math.pi * comb.harmonic_number(m)

    def _slit_index(self, height):
        """Index ``m`` with ``slit_height(m) == height`` exactly, else ``None``."""
        gap = (self.halfplane_rho - height) / math.pi
        if gap < 0.999:
            return None
        est = math.exp(gap - np.euler_gamma)
        for m in range(max(1, int(est) - 2), int(est) + 4):
            if self.slit_height(m) == height:
                return m
        return None

    def omega_contains(self, w):
        w = complex(w)
        if not w.imag < self.halfplane_rho:
            return False
        m = self._slit_index(w.imag)
        if m is None:
            return True
        if m > self.exact_tip_max:
            if w.real > -0.5 * m:
                return True
            raise NoConvergence(f"slit tip {m} is beyond the tabulated range")
        return w.real > comb.comb_slit_tip(m)[1]

    def horizontal_pieces(self, lo, hi):
        y = self.halfplane_rho
        out = [(y, -math.inf, math.inf)] if lo <= y <= hi else []
        # heights y - H_m decrease in m; keep those inside [lo, hi]
        m = 1
        while m <= self.max_slits:
            c = self.slit_height(m)
            if c < lo:
                break
            if c <= hi:
                out.append((c, -math.inf, comb.comb_slit_tip(m)[1]))
            m += 1
        return out


class SlitMidModel(SemigroupModel):
    """``{Im w > -1}`` minus ``{Im w = -1/2, Re w <= -1}`` (geometry only)."""

    id = "slit-mid"
    halfplane_rho = -1.0
    has_orbit = False

    def omega_contains(self, w):
        w = complex(w)
        if not w.imag > -1.0:
            return False
        return not (w.imag == -0.5 and w.real <= -1.0)

    def horizontal_pieces(self, lo, hi):
        out = []
        if lo <= -1.0 <= hi:
            out.append((-1.0, -math.inf, math.inf))
        if lo <= -0.5 <= hi:
            out.append((-0.5, -math.inf, -1.0))
        return out


def _dyadic_height(n):
    return 2.0 ** n * math.log(2.0) - 1.0


def _dyadic_reach(n):
    # slit n ends at Re w = 2^(2^n); beyond double range it is a full line
    e = 2 ** n
    return math.inf if e >= 1024 else math.ldexp(1.0, e)


class DyadicCombModel(SemigroupModel):
    """``{Im w > -1}`` minus ``{Im w = 2^n log 2 - 1, Re w <= 2^(2^n)}``, ``n >= 1`` (geometry only)."""

    id = "dyadic-comb"
    shift_type = "infinite"
    inner_argument = 0.0
    halfplane_rho = -1.0
    has_orbit = False

    def omega_contains(self, w):
        w = complex(w)
        if not w.imag > -1.0:
            return False
        x = (w.imag + 1.0) / math.log(2.0)
        if x < 1.5:
            return True
        n = int(round(math.log2(x)))
        for k in (n - 1, n, n + 1):
            if k >= 1 and w.imag == _dyadic_height(k):
                return not w.real <= _dyadic_reach(k)
        return True

    def horizontal_pieces(self, lo, hi):
        out = [(-1.0, -math.inf, math.inf)] if lo <= -1.0 <= hi else []
        n = 1
        while n < 1000:
            c = _dyadic_height(n)
            if c > hi:
                break
            if c >= lo:
                out.append((c, -math.inf, _dyadic_reach(n)))
            n += 1
        return out


@lru_cache(maxsize=1)
def _catalog():
    return (HalfPlaneModel(), SectorModel(), CombModel(), SlitModel(), SlitMidModel(), DyadicCombModel())


def model_catalog():
    """The six catalog models (constructed once)."""
    return list(_catalog())


def get_model(model_id):
    for m in _catalog():
        if m.id == model_id:
            return m
    raise KeyError(f"unknown model id {model_id!r}; expected one of {', '.join(MODEL_IDS)}")


def koenigs_eval(model, z):
    return model.koenigs(z)


def koenigs_derivative_eval(model, z):
    return model.koenigs_derivative(z)


def omega_contains(model, w):
    return model.omega_contains(w)


# ---------------------------------------------------------------------------
# sector probes


@dataclass(frozen=True)
class ProbeResult:
    theta: float
    apex: complex
    verdict: str  # "fits" or "violated"
    witness: complex | None = None


def _probe_directions(spec, resolution):
    th = spec.theta
    phis = th * np.linspace(0.0, 1.0, resolution + 2)[1:-1]
    phis = np.concatenate([[th * 1e-6], phis, [th * (1.0 - 1e-6)]])
    if spec.orientation == "lower":
        phis = -phis
    return phis


def sector_inclusion_probe(model, spec, depth, resolution=64):
    """Sample the sector ``spec`` out to radius ``depth`` and look for points outside Omega.

    Point samples use log-spaced radii and uniform angles. Each sampled ray is
    additionally intersected with the model's horizontal boundary pieces, so
    zero-width slits are detected too. ``violated`` comes with a witness point
    that fails ``omega_contains``; ``fits`` is evidence, not proof.
    """
    apex = complex(spec.apex)
    if not model.omega_contains(apex):
        raise DomainError(f"apex {apex!r} is not inside the Koenigs domain of {model.id!r}")
    depth = float(depth)
    phis = _probe_directions(spec, int(resolution))
    radii = np.geomspace(depth * 1e-6, depth, int(resolution))
    dirs = np.exp(1j * phis)

    pts = apex + radii[:, None] * dirs[None, :]
    for w in pts.ravel():
        if not model.omega_contains(w):
            return ProbeResult(spec.theta, apex, "violated", complex(w))

    sin = np.sin(phis)
    ymin = apex.imag + depth * min(sin.min(), 0.0)
    ymax = apex.imag + depth * max(sin.max(), 0.0)
    for height, x_lo, x_hi in model.horizontal_pieces(ymin, ymax):
        dy = height - apex.imag
        with np.errstate(divide="ignore", invalid="ignore"):
            r = dy / sin
        ok = np.isfinite(r) & (r > 0) & (r <= depth)
        if not ok.any():
            continue
        x = apex.real + r[ok] * np.cos(phis[ok])
        hit = (x >= x_lo) & (x <= x_hi)
        if hit.any():
            w = complex(float(x[hit][0]), height)
            if not model.omega_contains(w):
                return ProbeResult(spec.theta, apex, "violated", w)
    return ProbeResult(spec.theta, apex, "fits", None)


def inner_argument_estimate(model, apex_search, depth, tol=1e-3, resolution=64):
    """Largest sector opening (to ``tol``) that fits at some apex; a lower estimate of the inner argument."""

    def fits(theta):
        for p in apex_search:
            spec = SectorSpec(complex(p), theta, model.orientation)
            if sector_inclusion_probe(model, spec, depth, resolution).verdict == "fits":
                return True
        return False

    if fits(math.pi):
        return math.pi
    lo, hi = 0.0, math.pi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return lo
