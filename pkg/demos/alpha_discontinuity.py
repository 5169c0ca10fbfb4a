"""A jump of the ratio: A_alpha -> A_0 while the estimate stays at pi/2.

Writes report.json, alpha_sweep.csv and alpha_sweep.svg into the directory
given as the first argument (default ./out_alpha).

Run: python demos/alpha_discontinuity.py [out_dir]
"""

import sys

from crouzeix_ratio.experiments import discontinuity_demo, emit_report
from crouzeix_ratio.experiments.report import plot_alpha_sweep

out = sys.argv[1] if len(sys.argv) > 1 else "out_alpha"
rep = discontinuity_demo((1, 0.5, 0.25, 0.125))
print(f"psi_lb(A_0) = {rep.psi_a0:.9f}")
for a, c, p in zip(rep.alphas, rep.psi_candidate, rep.psi_poly):
    print(f"alpha={a:<6} tanh witness {c:.9f}  polynomial search {p:.6f}")
print("checks:", rep.checks)
emit_report({"discontinuity": rep}, out)
plot_alpha_sweep(f"{out}/alpha_sweep.svg", rep)
