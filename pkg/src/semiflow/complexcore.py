"""Principal-branch complex arithmetic and the Cayley maps between the disk and half-planes.

Points are plain Python/numpy complex numbers. The branch cut of ``arg``/``log``
is the negative real axis with ``arg`` taking values in ``(-pi, pi]``.
"""
import cmath
import math

from .errors import DomainError

__all__ = [
    "as_point",
    "principal_arg",
    "complex_pow",
    "cayley_disk_to_halfplane",
    "cayley_halfplane_to_disk",
    "dw_distance_from_halfplane",
]


def as_point(z, name="z"):
    """Coerce to complex and reject NaN/inf coordinates."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"{name} has a non-finite coordinate: {z!r}")
    return z


def principal_arg(z):
    z = as_point(z)
    if z == 0:
        raise DomainError("arg(0) is undefined")
    # atan2(-0.0, x<0) gives -pi; the cut is closed on the upper side
    return math.atan2(z.imag + 0.0, z.real)


def complex_pow(z, p):
    """Principal power ``exp(p * (log|z| + i arg z))``."""
    z = as_point(z)
    p = float(p)
    if z == 0:
        if p <= 0:
            raise DomainError("0 ** p is undefined for p <= 0")
        return 0j
    if p == 1.0:
        return z
    return cmath.exp(p * complex(math.log(abs(z)), principal_arg(z)))


def cayley_disk_to_halfplane(z, tau=1.0):
    """``C(z) = i (tau + z) / (tau - z)``; sends the disk onto the upper half-plane and tau to infinity."""
    z = as_point(z)
    tau = as_point(tau, "tau")
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)!r} is not inside the unit disk")
    return 1j * (tau + z) / (tau - z)


def cayley_halfplane_to_disk(w, tau=1.0):
    """Inverse of :func:`cayley_disk_to_halfplane`: ``tau (w - i) / (w + i)``."""
    w = as_point(w, "w")
    tau = as_point(tau, "tau")
    if w.imag <= 0:
        raise DomainError(f"Im w = {w.imag!r} is not positive")
    return tau * (w - 1j) / (w + 1j)


def dw_distance_from_halfplane(w):
    """``|cayley_halfplane_to_disk(w) - tau|`` evaluated as ``2/|w + i|`` (no cancellation)."""
    return 2.0 / abs(complex(w) + 1j)
