import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from semiflow.errors import DomainError
from semiflow.harmonic import (
    BoundaryPrimitive as P, HarmonicEstimate, example51_bounds, example51_domain, example52_chain,
    example52_rectangle, example52_t, hm_halfplane_halfline, hm_sector, hm_strip_top,
    wos_estimate, wos_label_counts,
)

STRIP = [P("horizontal-line", 0j, 0.0, "bottom"), P("horizontal-line", 2j, 0.0, "top")]
HALF = [P("segment", 0j, math.inf, "right"), P("horizontal-ray-left", 0j, 0.0, "left")]
QUARTER = [P("segment", 0j, math.inf, "alpha"), P("vertical-segment", 0j, math.inf, "beta")]


def test_hm_sector_examples():
    assert hm_sector(cmath.exp(0.25j * math.pi), 0, math.pi / 2, "beta").value == pytest.approx(0.5, abs=1e-15)
    assert hm_sector(1 + 1j, 0, math.pi, "alpha").value == pytest.approx(0.75, abs=1e-15)
    near = hm_sector(cmath.exp(1j * (math.pi / 2 - 1e-9)), 0, math.pi / 2, "beta").value
    assert near == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(DomainError):
        hm_sector(-1 + 0.1j, 0, math.pi / 2)


@given(st.floats(-math.pi + 0.01, math.pi - 0.02), st.floats(0.01, 1.0), st.floats(0.001, 0.999), st.floats(0.01, 100))
def test_hm_sector_complementarity(alpha, span_frac, pos, r):
    beta = alpha + span_frac * (math.pi - alpha)
    z = r * cmath.exp(1j * (alpha + pos * (beta - alpha)))
    try:
        a = hm_sector(z, alpha, beta, "alpha").value
        b = hm_sector(z, alpha, beta, "beta").value
    except DomainError:
        return  # rounding put z on an edge
    assert a + b == 1.0


@pytest.mark.parametrize("z,c,expected", [(1j, 0, 0.5), (1 + 1j, 0, 0.25), (11 + 0.5j, 1, math.atan(0.05) / math.pi)])
def test_hm_halfplane_halfline(z, c, expected):
    assert hm_halfplane_halfline(z, c).value == pytest.approx(expected, rel=1e-14)


def test_hm_halfplane_errors_and_exact_fields():
    with pytest.raises(DomainError):
        hm_halfplane_halfline(1, 0)
    est = hm_halfplane_halfline(1j)
    assert (est.stderr, est.method, est.paths) == (0.0, "exact", 0)


def test_hm_strip_top():
    assert hm_strip_top(0, -1, 4 * math.log(2)).value == pytest.approx(0.360674, abs=1e-6)
    assert hm_strip_top(0, -1, 8 * math.log(2)).value == pytest.approx(0.180337, abs=1e-6)
    assert hm_strip_top(3 + 1j, 0, 2).value == 0.5
    for n in range(1, 11):
        v = hm_strip_top(7.0, -1, 2 ** (n + 1) * math.log(2)).value
        assert abs(v - 1 / (2 ** (n + 1) * math.log(2))) <= 1e-15
    with pytest.raises(DomainError):
        hm_strip_top(3j, 0, 2)


def test_primitive_distances():
    x, y = np.array([0.0, 3.0, -5.0]), np.array([1.0, 0.5, -2.0])
    assert np.allclose(P("horizontal-line", 1j).distance(x, y), [0, 0.5, 3])
    assert np.allclose(P("horizontal-ray-left", -1 - 0.5j).distance(x, y), [math.hypot(1, 1.5), math.hypot(4, 1), 1.5])
    assert np.allclose(P("segment", 0j, 2.0).distance(x, y), [1, math.hypot(1, 0.5), math.hypot(5, 2)])
    assert np.allclose(P("vertical-segment", 1 + 0j, 1.0).distance(x, y), [1, math.hypot(2, 0), math.hypot(6, 2)])
    with pytest.raises(ValueError):
        P("circle", 0j)


@pytest.mark.parametrize("prims,z,tgt,exact", [
    (STRIP, 1j, "top", 0.5),
    (HALF, 1 + 1j, "left", 0.25),
    (QUARTER, 1 + 2j, "beta", math.atan2(2, 1) / (math.pi / 2)),
])
def test_wos_matches_exact(prims, z, tgt, exact):
    est = wos_estimate(prims, z, {tgt}, 100_000, 42)
    assert est.method == "wos" and est.paths == 100_000 and est.seed == 42
    assert abs(est.value - exact) <= max(3 * est.stderr, 5e-3)
    assert est.stderr == pytest.approx(math.sqrt(est.value * (1 - est.value) / est.paths), rel=1e-12)


def test_wos_determinism_across_workers():
    a = wos_estimate(HALF, 1 + 1j, "left", 20_000, 7, workers=1)
    b = wos_estimate(HALF, 1 + 1j, "left", 20_000, 7, workers=3)
    c = wos_estimate(HALF, 1 + 1j, "left", 20_000, 7, workers=8)
    assert a == b == c
    assert wos_estimate(HALF, 1 + 1j, "left", 20_000, 8).value != a.value


def test_wos_counts_partition_paths():
    counts = wos_label_counts(example51_domain(), 10 + 0j, 9000, 3)
    assert sum(counts.values()) == 9000
    s = wos_estimate(example51_domain(), 10 + 0j, {"slit"}, 9000, 3).value
    b = wos_estimate(example51_domain(), 10 + 0j, {"bottom"}, 9000, 3).value
    assert s + b == pytest.approx(1.0, abs=1e-15)


def test_wos_errors():
    with pytest.raises(DomainError):
        wos_estimate(STRIP, 0.5e-4j, "top", 1000, 1)
    with pytest.raises(ValueError):
        wos_estimate(STRIP, 1j, "left", 1000, 1)


@pytest.mark.parametrize("t", [10.0, 50.0, 100.0])
def test_example51_monotonicity(t):
    est = wos_estimate(example51_domain(), complex(t, 0), "slit", 100_000, 42)
    lo, hi = example51_bounds(t)
    assert est.value >= hm_halfplane_halfline(complex(t + 1, 0.5), 0).value - 3 * est.stderr
    assert lo == pytest.approx(hm_halfplane_halfline(complex(t + 1, 0.5), 0).value, rel=1e-12)


def test_example51_bounds():
    lo, hi = example51_bounds(10)
    assert lo == pytest.approx(0.014458, abs=1e-6) and hi == pytest.approx(0.031831, abs=1e-6)
    lo, hi = example51_bounds(1e9)
    assert 1e9 * lo == pytest.approx(1 / (2 * math.pi), rel=1e-8)
    assert 1e9 * hi == pytest.approx(1 / math.pi, rel=1e-12)
    for t in (1, 2, 10, 1e3):
        lo, hi = example51_bounds(t)
        assert lo < hi


def test_example52_geometry():
    assert example52_t(1) == 10.0 and example52_t(2) == 136.0
    rect = example52_rectangle(1)
    assert {p.label for p in rect} == {"U", "D", "L", "R"}
    with pytest.raises(OverflowError):
        example52_chain(5, 1000, 1)
    with pytest.raises(OverflowError):
        example52_rectangle(5)


def test_example52_chain_n1():
    r = example52_chain(1, 100_000, 42)
    assert r.t_n == 10.0
    assert r.strip_exact == pytest.approx(1 / (4 * math.log(2)), rel=1e-15)
    assert r.chain_holds and r.lower_holds


def test_estimate_json():
    d = json.loads(HarmonicEstimate(0.25, 0.01, "wos", 1000, 3).to_json())
    assert list(d) == ["value", "stderr", "method", "paths", "seed"]
