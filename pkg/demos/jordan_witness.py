"""The 2x2 Jordan block: search recovers a multiple of z and the ratio 2.

Run: python demos/jordan_witness.py
"""

import numpy as np

from crouzeix_ratio import eval_poly, op_norm, ratio_lb_poly
from crouzeix_ratio.polynomial import Polynomial

j = np.array([[0, 1], [0, 0]], dtype=complex)
est = ratio_lb_poly(j, degree=2)
print(f"search estimate   {est.value:.6f}  (certified sup {est.cert_sup:.6f})")
print("monomial coeffs  ", np.round(est.witness.monomial_coeffs(), 4))
# W(J) is the closed disk of radius 1/2, so |2z| <= 1 there and ||2J|| = 2
print(f"exact witness 2z  {op_norm(eval_poly(j, Polynomial([0, 2]))):.6f}")
