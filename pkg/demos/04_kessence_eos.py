# # k-essence near an extremum of F(X)
#
# F(X) = F0 + F2 (X - X0)^2.  Just above X0 the fluid behaves almost like a
# cosmological constant and perturbations barely propagate.

import math

import numpy as np

from falsevac import (
    KEssenceModel, PotentialParams, epsilon_decay, equation_of_state,
    hubble_squared, integrate_field_equation, paper_cs2_form, sound_speed_sq,
)

m = KEssenceModel()
x = m.x0 + m.eps0
print("F0 =", m.f0, " F2 =", m.f2, " X0 =", m.x0, " eps0 =", m.eps0)
print("w at X0 + eps0   =", equation_of_state(x, m))
print("cs2 at X0 + eps0 =", sound_speed_sq(x, m))
print("outside the wall (X0 = 0): cs2 =", sound_speed_sq(m.eps0, m.with_x0(0.0)),
      " printed form gives", paper_cs2_form(0.0, m.eps0))

# How fast does eps = X - X0 relax?  Integrate the field equation with a
# constant Hubble rate and compare with exp(-3 H t).

traj = integrate_field_equation(m, PotentialParams(), 0.0, math.sqrt(2 * x), 1.0, 1e-3, constant_v=m.v0)
h = math.sqrt(hubble_squared(m.v0))
for i in (0, 250, 500, 1000):
    t = traj.t[i]
    print(f"  t = {t:4.2f}   eps = {traj.X[i] - m.x0:.6e}   closed form {m.eps0 * np.exp(-3 * h * t):.6e}")

# The closed-form law written with rate 8 pi V0 decays much faster.
print("exp(-8 pi V0 t) law at t = 1:", epsilon_decay(1.0, m.eps0, m.v0))
