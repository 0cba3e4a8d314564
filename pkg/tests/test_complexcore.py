import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiflow.complexcore import (
    as_point, cayley_disk_to_halfplane, cayley_halfplane_to_disk, complex_pow,
    dw_distance_from_halfplane, principal_arg,
)
from semiflow.errors import DomainError


@pytest.mark.parametrize("z,expected", [(1, 0.0), (1j, math.pi / 2), (-1 - 1j, -3 * math.pi / 4), (-1, math.pi)])
def test_principal_arg_values(z, expected):
    assert principal_arg(z) == pytest.approx(expected, abs=1e-15)


def test_principal_arg_negative_zero_imag_stays_on_upper_edge():
    assert principal_arg(complex(-2.0, -0.0)) == math.pi


def test_principal_arg_zero_is_error():
    with pytest.raises(DomainError):
        principal_arg(0)


@given(st.floats(-1e3, 1e3), st.floats(1e-6, 1e3))
def test_principal_arg_conjugate_symmetry(x, y):
    z = complex(x, y)
    assert principal_arg(z.conjugate()) == -principal_arg(z)


@pytest.mark.parametrize("z,p,expected", [(1j, 2, -1), (cmath.exp(0.25j * math.pi), 2, 1j), (4, 0.5, 2)])
def test_complex_pow_values(z, p, expected):
    assert abs(complex_pow(z, p) - expected) < 1e-15


def test_complex_pow_zero():
    assert complex_pow(0, 2) == 0
    with pytest.raises(DomainError):
        complex_pow(0, -1)
    with pytest.raises(DomainError):
        complex_pow(0, 0)


@given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
def test_complex_pow_one_is_identity(x, y):
    z = complex(x, y)
    if z != 0:
        assert abs(complex_pow(z, 1) - z) <= 1e-15 * abs(z)


@settings(max_examples=200)
@given(st.floats(0.01, 100), st.floats(-math.pi + 1e-3, math.pi), st.floats(0.05, 3.0))
def test_complex_pow_modulus_and_argument(r, a, p):
    z = r * cmath.exp(1j * a)
    w = complex_pow(z, p)
    assert abs(w) == pytest.approx(abs(z) ** p, rel=1e-12)
    if abs(p * principal_arg(z)) < math.pi - 1e-9:
        assert principal_arg(w) == pytest.approx(p * principal_arg(z), abs=1e-12)


@pytest.mark.parametrize("z,expected", [(0, 1j), (0.5, 3j)])
def test_cayley_values(z, expected):
    assert abs(cayley_disk_to_halfplane(z, 1) - expected) < 1e-15
    assert abs(cayley_halfplane_to_disk(expected, 1) - z) < 1e-15


def test_cayley_opposite_point_limit():
    assert abs(cayley_disk_to_halfplane(-1 + 1e-12, 1)) < 1e-11


def test_cayley_domain_errors():
    with pytest.raises(DomainError):
        cayley_disk_to_halfplane(1.0, 1)
    with pytest.raises(DomainError):
        cayley_halfplane_to_disk(-1j, 1)
    with pytest.raises(DomainError):
        as_point(complex(math.nan, 0))


def test_cayley_round_trip_1000_points(rng):
    r = 0.999 * np.sqrt(rng.random(1000))
    zs = r * np.exp(2j * math.pi * rng.random(1000))
    taus = np.exp(2j * math.pi * rng.random(1000))
    err = max(abs(cayley_halfplane_to_disk(cayley_disk_to_halfplane(z, t), t) - z) for z, t in zip(zs, taus))
    assert err < 1e-14


def test_cayley_image_is_upper_halfplane(rng):
    zs = 0.99 * np.sqrt(rng.random(500)) * np.exp(2j * math.pi * rng.random(500))
    assert all(cayley_disk_to_halfplane(z, 1).imag > 0 for z in zs)


@pytest.mark.parametrize("w", [1e3j, 1e8 + 5j, -1e12 + 1e3j])
def test_dw_distance_matches_subtraction_where_safe(w):
    exact = dw_distance_from_halfplane(w)
    assert exact == pytest.approx(2 / abs(w + 1j))
    if abs(w) < 1e9:
        assert abs(cayley_halfplane_to_disk(w) - 1) == pytest.approx(exact, rel=1e-6)
