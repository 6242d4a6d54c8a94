# # Nucleation and tunneling
#
# Three estimates side by side: the gravitationally corrected bounce rate,
# the pair density in de Sitter space and a transfer amplitude between two
# Gaussian wave functionals.

import numpy as np

from falsevac import (
    GridSeries, NucleationInputs, PotentialParams, WaveFunctional, bracket_terms,
    cdl_rate, find_vacua, garriga_density, golden_rule_rate, normalization_constant,
    transfer_closed_form, transfer_discretized,
)

n = NucleationInputs()
print("bounce rate      :", cdl_rate(n))
print("pair density     :", garriga_density(n))

p = PotentialParams()
vs = find_vacua(p)
br = bracket_terms(p, vs)
c1 = normalization_constant(br.bracket_A, n.length_L)
c2 = normalization_constant(br.bracket_B, n.length_L)
print("normalisations   :", c1, c2)
print("closed-form |T|  :", transfer_closed_form(n, c1, c2))

# The same matrix element from the functionals themselves, reduced to one
# collective coordinate: the spatially constant field value.

xs = np.linspace(-n.length_L / 2, n.length_L / 2, 401)
flat = lambda v: GridSeries(xs, np.full_like(xs, v))
psi_i = WaveFunctional(c1, n.alpha_gap, flat(vs.phi_F), "initial")
psi_f = WaveFunctional(c2, n.alpha_gap, flat(vs.phi_T), "final")
t = transfer_discretized(psi_i, psi_f, flat(vs.phi_barrier), n.length_L)
print("one-mode T       :", t)
print("golden-rule rate :", golden_rule_rate(t, garriga_density(n)))
