"""Probes of lower and upper semicontinuity along seeded perturbation directions.

Run: python demos/semicontinuity.py
"""

from crouzeix_ratio.experiments import alpha_direction_probe, alpha_matrix, jordan2, semicontinuity_probe

for name, a in (("J (interior spectrum)", jordan2()), ("A_1/4 (boundary eigenvalue)", alpha_matrix(0.25))):
    rep = semicontinuity_probe(a, n_list=(10, 100, 1000))
    vals = ", ".join(f"{v:.5f}" for v in rep.psi_n)
    print(f"{name}: base {rep.psi_base:.5f}, A + E/n -> [{vals}], checks {rep.checks}")
rep = alpha_direction_probe()
print(f"A_0 along e_2 e_3^T: base {rep.psi_base:.6f}, estimates {[round(v, 6) for v in rep.psi_n]}")
print("gap persists:", rep.checks["gap"])
