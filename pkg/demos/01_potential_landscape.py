# # The tilted cosine potential
#
# V1 is a cosine well of depth 2 * cos_coeff sitting on a shallow parabola
# centred at phi* = 0.99 pi.  On [0, 2 pi] that gives two minima and a barrier.

import math

import numpy as np

from falsevac import PotentialParams, find_vacua, v1, v1_d1

p = PotentialParams()
print("m =", p.m, " phi* =", p.phi_star, " cos_coeff =", p.cos_coeff)

# A coarse look at the curve.

for phi in np.linspace(0.0, 2 * math.pi, 9):
    print(f"  phi = {phi:6.3f}   V1 = {v1(phi, p):.5f}   V1' = {v1_d1(phi, p):+.5f}")

# Locating the stationary points.  The false vacuum is the higher of the two
# wells, whichever side it lands on.

vs = find_vacua(p)
print("false vacuum phi_F  =", vs.phi_F, " V1 =", v1(vs.phi_F, p))
print("true vacuum  phi_T  =", vs.phi_T, " V1 =", v1(vs.phi_T, p))
print("barrier top         =", vs.phi_barrier)
print("energy gap          =", vs.delta_E, " -> pair separation L =", vs.length_L)

# A larger cosine coefficient deepens both wells and moves them outward.

vs2 = find_vacua(PotentialParams(cos_coeff=0.5989))
print("cos_coeff = 0.5989:", sorted([vs2.phi_F, vs2.phi_T]), "gap", vs2.delta_E)

# With phi* = pi the wells are mirror images and there is nothing to decay to.

sym = find_vacua(PotentialParams(phi_star=math.pi))
print("symmetric case degenerate:", sym.degenerate, " L =", sym.length_L)
