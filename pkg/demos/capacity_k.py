"""Fekete estimates of the capacity of K (three semi-disks) with the sandwich bounds.

Run: python demos/capacity_k.py [out.svg]
"""

import sys

from crouzeix_ratio.experiments import RegionK, Segment, UnitCircle, fekete_capacity
from crouzeix_ratio.experiments.report import plot_fekete

for region in (UnitCircle(), Segment(), RegionK()):
    est = fekete_capacity(region)
    hist = ", ".join(f"d_{n}={d:.4f}" for n, d in est.history)
    print(f"{region.name:>8}: {hist}  capacity in {est.capacity_bounds}")
# d_n decreases to the capacity only slowly: on the unit circle d_n = n**(1/(n-1))
plot_fekete(sys.argv[1] if len(sys.argv) > 1 else "fekete_k.svg", est)
