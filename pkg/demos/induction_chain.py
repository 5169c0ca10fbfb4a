"""Similarity S_n = P_n P + Q_n Q for T_n = T + E/n and the resulting bound chain.

Run: python demos/induction_chain.py
"""

from crouzeix_ratio.experiments import induction_sweep

rep = induction_sweep()
print(f"{'n':>5} {'psi_lb':>9} {'cond(S_n)':>10} {'cond^2*2':>9} {'n*||S_n-I||':>12}")
for r in rep.rows:
    sn = r["s_minus_identity_times_n"]
    print(f"{r['n']:>5} {r['psi_lb']:9.6f} {r['cond']:10.6f} {r['bound']:9.6f} "
          f"{'-' if sn is None else f'{sn:.4f}':>12}")
print("all bounds hold:", rep.passed)
