"""
The model catalog and its Koenigs domains
=========================================

Six semigroups, four with an explicit Koenigs function.  Each model answers
"is w in Omega?" exactly, which is what the sector probe builds on.
"""
import math

from semiflow import comb
from semiflow.hypgeo import SectorSpec
from semiflow.models import get_model, inner_argument_estimate, model_catalog, sector_inclusion_probe

for m in model_catalog():
    print(f"{m.id:12s} {m.parameter_domain:17s} {m.shift_type:8s} Theta={m.inner_argument:.4f} {m.capabilities}")

# the slit model: w0 solves w + log w = i pi
slit = get_model("slit")
print("\nw0 =", slit.w0, " h(0) =", slit.koenigs(0))

# comb: every term vanishes at z = i
cm = get_model("comb")
print("comb h(i) =", cm.koenigs(1j), " h(2i) =", cm.koenigs(2j))
print("top line y =", cm.halfplane_rho)
for m in (1, 2, 3, 10, 100):
    k, tip = comb.comb_slit_tip(m)
    print(f"  slit {m:3d}: height {cm.slit_height(m):+9.4f}, tip Re h(k_m) = {tip:10.4f}, k_m = {k:.6f}")

# the accelerated series against brute force (1e7 terms + one Richardson step)
raw, extrap = comb.comb_richardson_oracle(2j)
print(f"|h(2i) - S_N| = {abs(cm.koenigs(2j) - raw):.2e}, |h(2i) - (2S_N - S_N/2)| = {abs(cm.koenigs(2j) - extrap):.2e}")

# sector probes: violations come with a witness outside Omega
sec = get_model("sector")
print("\nsector, theta = 0.6 pi:", sector_inclusion_probe(sec, SectorSpec(0, 0.6 * math.pi), 1e3, 64))
print("sector inner argument estimate:", inner_argument_estimate(sec, [0, 1 + 1j], 1e3, 1e-3), "vs pi/2 =", math.pi / 2)

dy = get_model("dyadic-comb")
for apex in (0, 1e3, 1e6 + 5j):
    r = sector_inclusion_probe(dy, SectorSpec(apex, 0.1), 1e6, 64)
    print(f"dyadic comb, apex {apex}: {r.verdict}, witness {r.witness}")

apex = complex(30, cm.halfplane_rho - 0.5)
print("comb, 0.9 pi lower sector at", apex, ":",
      sector_inclusion_probe(cm, SectorSpec(apex, 0.9 * math.pi, "lower"), 100, 64).verdict)
print("comb, same opening at 2 + 0.9i:",
      sector_inclusion_probe(cm, SectorSpec(complex(2, cm.halfplane_rho - 0.5), 0.9 * math.pi, "lower"), 100, 64))
