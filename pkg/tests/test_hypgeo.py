import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiflow.errors import DomainError
from semiflow.hypgeo import (
    Horodisk, SectorSpec, dist_disk, dist_halfplane, dist_sector, horodisk_parameter,
    hyperbolic_length_disk,
)

LN3_HALF = 0.5493061443340549  # 0.5 log 3
LOG_1P_SQRT2 = 0.881373587019543  # asinh(1)


def test_dist_disk_values():
    assert dist_disk(0, 0) == 0
    assert dist_disk(0, 0.5) == pytest.approx(LN3_HALF, rel=1e-15)
    assert dist_disk(0, 0.5 - 0.5j) == pytest.approx(LOG_1P_SQRT2, rel=1e-14)


def test_dist_halfplane_values():
    assert dist_halfplane(1j, 2j, 0.0) == pytest.approx(0.5 * math.log(2), rel=1e-15)
    assert dist_halfplane(0, 2, -1.0) == pytest.approx(LOG_1P_SQRT2, rel=1e-14)
    assert dist_halfplane(3 + 1j, 3 + 1j, 0.7 - 5) == 0


def test_dist_halfplane_lower_orientation_is_mirror():
    a, b = 1 - 2j, -4 - 0.5j
    assert dist_halfplane(a, b, 0.0, "lower") == pytest.approx(dist_halfplane(a.conjugate(), b.conjugate()), rel=1e-15)
    assert dist_halfplane(a + 3j, b + 3j, 3.0, "lower") == pytest.approx(dist_halfplane(a, b, 0.0, "lower"), rel=1e-13)


def test_dist_domain_errors():
    with pytest.raises(DomainError):
        dist_disk(0, 1)
    with pytest.raises(DomainError):
        dist_halfplane(0, 1j, 0.0)
    with pytest.raises(DomainError):
        dist_halfplane(2j, 1j, 1.5, "lower")
    with pytest.raises(DomainError):
        dist_sector(1j, -1 + 0.1j, SectorSpec(0, math.pi / 2))
    with pytest.raises(ValueError):
        SectorSpec(0, 0.0)


def test_dist_sector_values():
    e = cmath.exp(0.25j * math.pi)
    assert dist_sector(e, 2 * e, SectorSpec(0, math.pi / 2)) == pytest.approx(math.log(2), rel=1e-14)
    assert dist_sector(e, e, SectorSpec(0, 1.0)) == 0


def test_dist_sector_lower_and_apex_shift():
    spec = SectorSpec(2 + 1j, math.pi / 3, "lower")
    a, b = 2 + 1j + 0.5 * cmath.exp(-0.4j), 2 + 1j + 3 * cmath.exp(-0.9j)
    up = SectorSpec(0, math.pi / 3)
    assert dist_sector(a, b, spec) == pytest.approx(dist_sector((a - spec.apex).conjugate(), (b - spec.apex).conjugate(), up), rel=1e-13)


def test_sector_pi_equals_halfplane_1000_pairs(rng):
    z = rng.uniform(-5, 5, 1000) + 1j * rng.uniform(1e-3, 5, 1000)
    w = rng.uniform(-5, 5, 1000) + 1j * rng.uniform(1e-3, 5, 1000)
    spec = SectorSpec(0, math.pi)
    err = max(abs(dist_sector(a, b, spec) - dist_halfplane(a, b, 0.0)) for a, b in zip(z, w))
    assert err <= 1e-12


def test_mobius_invariance_500(rng):
    for _ in range(500):
        a = 0.9 * np.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random())
        lam = np.exp(2j * math.pi * rng.random())
        z, w = (0.9 * np.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random()) for _ in range(2))
        T = lambda x: lam * (x - a) / (1 - np.conj(a) * x)  # noqa: E731
        assert dist_disk(T(z), T(w)) == pytest.approx(dist_disk(z, w), abs=1e-11 * max(1, dist_disk(z, w)))


def test_sector_power_map_agrees_with_halfplane_of_images(rng):
    for _ in range(200):
        th = rng.uniform(0.2, math.pi)
        z = rng.uniform(0.1, 5) * cmath.exp(1j * th * rng.uniform(0.01, 0.99))
        w = rng.uniform(0.1, 5) * cmath.exp(1j * th * rng.uniform(0.01, 0.99))
        # independent path: powers through numpy polar form
        zi = abs(z) ** (math.pi / th) * np.exp(1j * np.angle(z) * math.pi / th)
        wi = abs(w) ** (math.pi / th) * np.exp(1j * np.angle(w) * math.pi / th)
        # density 1/(2y): half the curvature -1 distance
        ref = 0.5 * math.acosh(1 + abs(zi - wi) ** 2 / (2 * zi.imag * wi.imag))
        assert dist_sector(z, w, SectorSpec(0, th)) == pytest.approx(ref, rel=1e-9, abs=1e-11)


@settings(max_examples=200)
@given(st.floats(-3, 3), st.floats(0.01, 3), st.floats(-3, 3), st.floats(0.01, 3), st.floats(0.1, 1.0))
def test_domain_monotonicity_sector_vs_halfplane(x1, y1, x2, y2, frac):
    # the sector {0 < Arg < theta} sits inside the upper half-plane
    th = frac * math.pi
    z = complex(x1, y1)
    w = complex(x2, y2)
    spec = SectorSpec(-10 - 0.0j, th)
    # shift points into the sector when needed
    z, w = (p if spec.contains(p) else -10 + abs(p + 10) * cmath.exp(0.5j * th) for p in (z, w))
    assert dist_halfplane(z, w, 0.0) <= dist_sector(z, w, spec) + 1e-12


@given(st.floats(-100, 100), st.floats(0.01, 100), st.floats(1, 1e12))
def test_halfplane_translation_lower_bound(x, y, t):
    z = complex(x, y)
    assert dist_halfplane(z, z + t, 0.0) >= math.log(t) - math.log(y) - 1e-9


def test_far_points_keep_precision():
    # log1p form: distance between i and i + 1e15 is log(1e15) to full precision
    assert dist_halfplane(1j, 1e15 + 1j, 0.0) == pytest.approx(math.log(1e15), rel=1e-14)


def test_hyperbolic_length():
    assert hyperbolic_length_disk([0, 0.5], 10_000) == pytest.approx(LN3_HALF, abs=1e-6)
    assert hyperbolic_length_disk([0.3j]) == 0
    assert hyperbolic_length_disk([0, 0.5j, 0.5], 100) >= dist_disk(0, 0.5) - 1e-9
    with pytest.raises(DomainError):
        hyperbolic_length_disk([0, 1.2])


@pytest.mark.parametrize("z,expected", [(0, 1.0), (0.5, 1 / 3), (-0.5, 3.0)])
def test_horodisk_parameter_values(z, expected):
    assert horodisk_parameter(z, 1) == pytest.approx(expected, rel=1e-15)


def test_horodisk_nesting_and_geometry(rng):
    hd1, hd2 = Horodisk(1, 0.5), Horodisk(1, 2.0)
    assert hd1.radius == pytest.approx(1 / 3)
    assert hd1.center == pytest.approx(2 / 3)
    for z in 0.99 * np.sqrt(rng.random(500)) * np.exp(2j * math.pi * rng.random(500)):
        if hd1.contains(z):
            assert hd2.contains(z)
        # membership equals Euclidean disk membership
        assert hd2.contains(z) == (abs(z - hd2.center) < hd2.radius) or abs(abs(z - hd2.center) - hd2.radius) < 1e-12
    with pytest.raises(DomainError):
        horodisk_parameter(1.0)
