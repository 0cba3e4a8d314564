"""
Harmonic measure: closed forms and walk on spheres
==================================================

WoS estimates are reproducible: the same (seed, paths) gives the same number
however many threads run the blocks.
"""
import math

from semiflow.harmonic import (
    BoundaryPrimitive as P, example51_bounds, example51_domain, example52_chain,
    hm_halfplane_halfline, hm_sector, hm_strip_top, wos_estimate,
)
from semiflow.rates import harmonic_rate

fixtures = [
    ("strip", [P("horizontal-line", 0j, 0, "bottom"), P("horizontal-line", 2j, 0, "top")], 1j, "top",
     hm_strip_top(1j, 0, 2).value),
    ("half-plane", [P("segment", 0j, math.inf, "right"), P("horizontal-ray-left", 0j, 0, "left")], 1 + 1j, "left",
     hm_halfplane_halfline(1 + 1j).value),
    ("quarter-plane", [P("segment", 0j, math.inf, "alpha"), P("vertical-segment", 0j, math.inf, "beta")], 1 + 2j,
     "beta", hm_sector(1 + 2j, 0, math.pi / 2, "beta").value),
]
for name, prims, z, tgt, exact in fixtures:
    one = wos_estimate(prims, z, tgt, 100_000, 42, workers=1)
    four = wos_estimate(prims, z, tgt, 100_000, 42, workers=4)
    print(f"{name:14s} exact {exact:.5f}  wos {one.value:.5f} +/- {one.stderr:.5f}  same with 4 workers: {one == four}")

# a half-plane with a slit: the slit's share decays like c/t
ts, ests = [10.0, 50.0, 100.0], []
for t in ts:
    e = wos_estimate(example51_domain(), complex(t, 0), "slit", 100_000, 42, workers=4)
    lo, hi = example51_bounds(t)
    ests.append(e)
    print(f"t = {t:5.0f}: omega = {e.value:.5f} +/- {e.stderr:.5f}   lower {lo:.5f}   envelope 1/(pi t) {hi:.5f}")
rep = harmonic_rate(ts, ests, dist=1.0, theta=math.pi)
print(f"extrapolated t * omega = {rep.slope:.4f}; bracket 1/(2 pi) = {1 / (2 * math.pi):.4f}, 1/pi = {1 / math.pi:.4f}")

# the dyadic comb: strip value vs rectangle estimates
for n in (1, 2):
    r = example52_chain(n, 100_000, 42, workers=4)
    print(f"n = {n}: t_n = {r.t_n:g}, strip {r.strip_exact:.5f}, omega(U) = {r.upper_side.value:.5f}, "
          f"omega(R) = {r.right_side.value:.5f}, chain {r.chain_holds}, lower {r.lower_holds}")
