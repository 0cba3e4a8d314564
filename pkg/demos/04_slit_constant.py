"""
The slit domain and its asymptotic constant
===========================================

For the domain {Im w > -pi} minus the slit {Im w = 0, Re w <= -1} the Koenigs
function is h = f o C with f(w) = w + log w - i pi and C the Mobius map of the
disk onto the upper half-plane with C(0) = w0, C(1) = infinity.  That map is
unique:

    C(z) = Re w0 + Im w0 * i(1+z)/(1-z),

and the prefactor in |phi_t(0) - 1| ~ c/t comes out as c = 2 Im w0.  The
map w0(1+z)/(1-z) would give 2|w0|, but it sends the disk onto the
half-plane {Re(w/w0) > 0}, not onto H, because w0 is not purely imaginary.
"""
import math

import numpy as np

from semiflow.complexcore import cayley_disk_to_halfplane
from semiflow.models import get_model
from semiflow.orbits import TimeGrid, flow, orbit_trace

m = get_model("slit")
w0 = m.w0
print("w0 =", w0)
print("2 Im w0 =", 2 * w0.imag, "  2|w0| =", 2 * abs(w0))

# w0 (1+z)/(1-z) at a disk point can land in the lower half-plane
z = 0.9 * np.exp(1j * 2.5)
print("w0(1+z)/(1-z) at z = 0.9 e^{2.5i}:", w0 * (1 + z) / (1 - z))

for t in (1e2, 1e3, 1e4, 1e5, 1e6):
    u = cayley_disk_to_halfplane(flow(m, 0, t))
    print(f"t = {t:8.0e}: t |phi_t(0) - 1| = {t * 2 / abs(u + 1j):.6f}")

# finite shift: the orbit avoids the horodisk of parameter Im w0 / pi
tr = orbit_trace(m, 0, TimeGrid(1.0, 1e6, 100))
print("min horodisk parameter:", tr.horodisk_param.min(), " limit Im w0/pi =", w0.imag / math.pi)
