"""
Orbits and their rates of convergence
=====================================

phi_t(z) = h^{-1}(h(z) + t), solved by damped Newton with continuation in t.
We fit the Euclidean decay exponent and the hyperbolic log-slope for each
orbit-capable model and compare them with the theorem brackets.
"""
import math

import numpy as np

from semiflow.models import get_model
from semiflow.orbits import TimeGrid, lemma41_check, orbit_trace, semigroup_property_check
from semiflow.rates import hyperbolic_lower_bound, theorem_verdicts

grid = TimeGrid(1.0, 1e6, 200)
for mid in ("halfplane", "sector", "slit", "comb"):
    m = get_model(mid)
    tr = orbit_trace(m, m.base_point, grid)
    print(f"\n== {mid}  (shift: {m.shift_type}, Theta = {m.inner_argument:.4f})")
    print(f"  max |h(phi_t) - h(z) - t|/(1+t) = {np.max(tr.linearization_residual() / (1 + tr.t)):.1e}")
    print(f"  horodisk parameter: start {tr.horodisk_param[0]:.4f}, min {tr.horodisk_param.min():.4g}")
    lb = hyperbolic_lower_bound(m, tr)
    print(f"  min of d(t) - lower bound: {np.nanmin(tr.hyp_from_start - lb):.3e}")
    for r in theorem_verdicts(m, tr):
        extra = f", c = {r.constant:.5f}" if r.kind == "euclid-exponent" else ""
        print(f"  {r.kind:16s} {r.slope:.5f} in {r.bracket}: {r.verdict}{extra}")
    if m.shift_type == "infinite":
        print("  two-sided Euclidean/hyperbolic sandwich holds at every sample:", bool(lemma41_check(tr, m).all()))
    print(f"  |phi_11 - phi_10 o phi_1| = {semigroup_property_check(m, m.base_point, 1.0, 10.0):.1e}")

# the half-plane baseline has a closed form
hp = orbit_trace(get_model("halfplane"), 0, grid)
print("\nhalfplane: max |phi_t(0) - t/(t+2i)| =", np.max(np.abs(hp.points - hp.t / (hp.t + 2j))))
