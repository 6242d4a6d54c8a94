# # Is the potential flat enough?
#
# Slow roll needs |V''| small against H^2 = 8 pi V / 3.  We check the ratio at
# both wells, the barrier top and phi*.

from falsevac import PotentialParams, find_vacua, guth_bound, slow_roll_report

p = PotentialParams()
vs = find_vacua(p)
points = {"phi_F": vs.phi_F, "barrier": vs.phi_barrier, "phi_T": vs.phi_T, "phi*": p.phi_star}

print(f"{'point':8s} {'phi':>8s} {'|Vpp|':>8s} {'H^2':>8s} {'ratio':>7s}  eps     eta")
for name, phi in points.items():
    r = slow_roll_report(phi, p)
    print(f"{name:8s} {r.phi:8.4f} {r.v_dd_abs:8.4f} {r.h_squared:8.4f} {r.ratio:7.4f}  "
          f"{r.epsilon_sr:.2e} {r.eta_sr:+.3f}")

# For a quadratic potential 60 e-folds need the field to start above this:
print("initial field bound:", guth_bound())
