"""Series engine for the comb Koenigs map

    h(z) = sum_{n>=1} (1/n) log((n - z)/(n - i)) - z,   Im z > 0.

The first ``M - 1`` terms are summed directly. The tail ``n >= M`` is
handled with the Euler-Maclaurin formula applied to
``f(x) = (log(x - z) - log(x - i)) / x``, whose integral over ``[M, inf)`` is
``Li2(i/M) - Li2(z/M)`` in closed form. ``M`` sits at least ``_GAP`` to the
right of ``Re z`` so ``f`` is smooth on the whole tail.
"""
from functools import lru_cache
import math

import numpy as np
from scipy import optimize, special

from .errors import NoConvergence

__all__ = [
    "comb_koenigs",
    "comb_koenigs_derivative",
    "comb_top_height",
    "harmonic_number",
    "comb_slit_tip",
    "comb_partial_sum",
    "comb_richardson_oracle",
]

_GAP = 12
_EM_TERMS = 8
_B2K = [float(b) for b in special.bernoulli(2 * _EM_TERMS)[2::2]]


def _cutoff(z):
    return max(_GAP, int(math.ceil(z.real)) + _GAP)


def _n_minus_z(n, z):
    # imaginary part -Im z keeps its sign even when Im z = 0, so real z gets
    # the boundary value from the upper half-plane (arg(n - x) = -pi for n < x)
    out = np.empty(n.shape, dtype=complex)
    out.real = n - z.real
    out.imag = -z.imag
    return out


def _f_derivatives(z, x, order):
    """Derivatives 0..order of f(x) = (log(x - z) - log(x - i)) / x at real x."""
    g = [complex(np.log(x - z) - np.log(x - 1j))]
    for j in range(1, order + 1):
        g.append((-1) ** (j - 1) * math.factorial(j - 1) * ((x - z) ** -j - (x - 1j) ** -j))
    q = [(-1) ** k * math.factorial(k) * x ** (-k - 1.0) for k in range(order + 1)]
    return [sum(math.comb(m, j) * g[j] * q[m - j] for j in range(m + 1)) for m in range(order + 1)]


def _li2(u):
    return complex(special.spence(1.0 - complex(u)))


def comb_koenigs(z):
    """Evaluate h(z). Accepts ``Im z >= 0`` (real points are boundary values)."""
    z = complex(z)
    m = _cutoff(z)
    n = np.arange(1, m, dtype=float)
    head = np.sum((np.log(_n_minus_z(n, z)) - np.log(n - 1j)) / n)
    d = _f_derivatives(z, float(m), 2 * _EM_TERMS - 1)
    tail = _li2(1j / m) - _li2(z / m) + 0.5 * d[0]
    last = 0.0
    for k, b in enumerate(_B2K, start=1):
        last = b / math.factorial(2 * k) * d[2 * k - 1]
        tail -= last
    if abs(last) > 1e-13 * (1.0 + abs(z)):
        raise NoConvergence(f"comb series tail estimate {abs(last):.3g} above tolerance at z={z!r}")
    return complex(head + tail - z)


def comb_koenigs_derivative(z):
    """h'(z) = sum_n 1/(n (z - n)) - 1, tail in closed form via the digamma function."""
    z = complex(z)
    m = _cutoff(z)
    n = np.arange(1, m, dtype=float)
    head = np.sum(1.0 / (n * (z - n)))
    if abs(z) >= 1.0:
        tail = (special.psi(m - z) - special.psi(float(m))) / z
    else:
        k = np.arange(30)
        tail = -np.sum(z ** k * special.zeta(k + 2.0, float(m)))
    return complex(head + tail - 1.0)


def comb_partial_sum(z, n_terms, chunk=1_000_000):
    """Brute-force ``sum_{n<=N} (1/n) log((n-z)/(n-i)) - z`` (no tail correction)."""
    z = complex(z)
    total = 0j
    for start in range(1, n_terms + 1, chunk):
        n = np.arange(start, min(start + chunk, n_terms + 1), dtype=float)
        total += np.sum((np.log(_n_minus_z(n, z)) - np.log(n - 1j)) / n)
    return complex(total - z)


def comb_richardson_oracle(z, n_terms=10_000_000):
    """Direct ``N``-term sum with one Richardson step, ``2 S_N - S_{N/2}``.

    The raw partial sum is off by about ``|z - i|/N``; the tail is
    ``(i - z)/N + O(1/N^2)`` so the extrapolation removes the leading error.
    Returns ``(S_N, extrapolated)``.
    """
    half = n_terms // 2
    s_half = comb_partial_sum(z, half)
    rest = 0j
    z = complex(z)
    for start in range(half + 1, n_terms + 1, 1_000_000):
        n = np.arange(start, min(start + 1_000_000, n_terms + 1), dtype=float)
        rest += np.sum((np.log(_n_minus_z(n, z)) - np.log(n - 1j)) / n)
    s_full = s_half + rest
    return s_full, 2.0 * s_full - s_half


@lru_cache(maxsize=1)
def comb_top_height():
    """``y = sum_n arctan(1/n)/n``: the comb domain lies in ``{Im w < y}``."""
    n0 = 64
    n = np.arange(1, n0 + 1, dtype=float)
    head = np.sum(np.arctan(1.0 / n) / n)
    k = np.arange(12)
    tail = np.sum((-1.0) ** k * special.zeta(2.0 * k + 2.0, n0 + 1.0) / (2.0 * k + 1.0))
    return float(head + tail)


def harmonic_number(m):
    return float(special.psi(m + 1.0) + np.euler_gamma)


def _hprime_real(x):
    return (special.psi(1.0 - x) + np.euler_gamma) / x - 1.0


@lru_cache(maxsize=None)
def comb_slit_tip(m):
    """Critical point ``k_m`` in ``(m, m+1)`` and slit tip abscissa ``Re h(k_m)``.

    Slit ``m`` of the comb domain is ``{Im w = y - pi H_m, Re w <= Re h(k_m)}``.
    """
    m = int(m)
    if m < 1:
        raise ValueError("slit index starts at 1")
    lo, hi = m + 1e-12 * m, m + 1 - 1e-12 * (m + 1)
    k = optimize.brentq(_hprime_real, lo, hi, xtol=1e-15, rtol=1e-15)
    return k, comb_koenigs(complex(k, 0.0)).real
