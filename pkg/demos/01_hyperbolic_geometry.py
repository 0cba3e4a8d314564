"""
Hyperbolic geometry in the disk, half-planes and sectors
========================================================

Distances are the raw material of every rate estimate, so we start by checking
that the closed forms agree with each other.
"""
import cmath
import math

import numpy as np

from semiflow.hypgeo import SectorSpec, dist_disk, dist_halfplane, dist_sector, horodisk_parameter, hyperbolic_length_disk

# the segment [0, 1/2] is a geodesic: distance and length agree
print("d_D(0, 1/2)        =", dist_disk(0, 0.5), " (1/2 log 3 =", 0.5 * math.log(3), ")")
print("length of [0, 1/2] =", hyperbolic_length_disk([0, 0.5], 10_000))

# h(z) = 2iz/(1-z) carries the disk onto {Im w > -1}; distances are preserved
z = 0.5 - 0.5j
print("d_D(0, z)          =", dist_disk(0, z))
print("d_H(h(0), h(z))    =", dist_halfplane(0, 2j * z / (1 - z), rho=-1.0))

# a quarter-plane is a sector of opening pi/2; the power map z**2 opens it up
e = cmath.exp(0.25j * math.pi)
print("sector distance    =", dist_sector(e, 2 * e, SectorSpec(0, math.pi / 2)), " (log 2 =", math.log(2), ")")

# smaller domain, larger distance
rng = np.random.default_rng(1)
gaps = []
for _ in range(1000):
    a, b = (complex(rng.uniform(-1, 1), rng.uniform(0.1, 2)) for _ in range(2))
    spec = SectorSpec(-3 - 0.5j, 0.8 * math.pi)
    if spec.contains(a) and spec.contains(b):
        gaps.append(dist_sector(a, b, spec) - dist_halfplane(a, b, rho=-0.5))
print(f"sector minus half-plane distance over {len(gaps)} pairs: min {min(gaps):.3e}")

# horodisks at tau = 1: the level sets of |1 - z|^2 / (1 - |z|^2)
for z in (0, 0.5, -0.5, 0.9 + 0.3j):
    print(f"horodisk parameter at {z!s:>12}: {horodisk_parameter(z):.6f}")

# along a half-plane orbit the log1p form keeps full precision far out
for t in (1e3, 1e9, 1e15):
    print(f"d_H(i, i + {t:g}) - log t = {dist_halfplane(1j, 1j + t) - math.log(t):+.3e}")
