# # Kink-antikink walls
#
# The field climbs from 0 to about 2 pi over a wall of width ~1/b, stays flat
# across the bubble of size L and comes back down.  All the gradient energy
# X = phi'^2 / 2 sits in the two walls.

import numpy as np

from falsevac import KinkProfile, kinetic_X, kinetic_integral, phi_of_x, wall_delta_check

k = KinkProfile(length_L=1.0, steepness_b=10.0)
xs = np.linspace(-1.0, 1.0, 2001)
X = kinetic_X(xs, k)
print("plateau phi(0) =", phi_of_x(0.0, k))
print("peak X =", X.max(), "at x =", xs[X.argmax()], " (pi^2 b^2 / 2 =", np.pi**2 * 50, ")")
print("X(0) =", kinetic_X(0.0, k))

# Steeper walls: the peak grows like b^2 and the integrated X like b, so the
# walls look more and more like delta functions.

peaks, integrals = wall_delta_check(k, [5.0, 10.0, 20.0, 40.0])
for b, pk, it in zip(peaks.xs, peaks.ys, integrals.ys):
    print(f"  b = {b:5.1f}   peak X = {pk:10.2f}   int X dx = {it:9.3f}")

total, _ = kinetic_integral(k)
print("int X dx at b = 10:", total)
