"""Construct-then-recover check of the boundary block splitting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..matcore import op_norm
from ..structure import boundary_split
from .families import boundary_block_instance


@dataclass
class DecompositionReport:
    count: int
    block_mismatches: int
    max_coupling: float
    max_reconstruction: float
    max_d_error: float

    @property
    def passed(self):
        return (self.block_mismatches == 0 and self.max_coupling <= 1e-8
                and self.max_reconstruction <= 1e-9)

    def to_dict(self):
        return {**self.__dict__, "passed": self.passed}


def decomposition_suite(count=500, seed=0, dims=(2, 3, 4, 5, 6), m=1024) -> DecompositionReport:
    """Split ``count`` seeded ``U (D (+) A_tilde) U^*`` instances and compare.

    Residuals are relative to ``||A||``; ``max_d_error`` compares the sorted
    recovered D with the constructed one.
    """
    rng = np.random.default_rng(seed)
    mism = 0
    worst_c = worst_r = worst_d = 0.0
    for i in range(count):
        n = int(dims[i % len(dims)])
        k = int(rng.choice([j for j in range(n + 1) if n - j != 1]))
        a, d, _, _ = boundary_block_instance(rng, k, n - k)
        s = boundary_split(a, m=m)
        na = op_norm(a)
        if s.k != k:
            mism += 1
            continue
        worst_c = max(worst_c, s.coupling_residual / na)
        worst_r = max(worst_r, op_norm(s.reconstruct() - a) / na)
        if k:
            got = np.sort_complex(np.diag(s.d_block))
            worst_d = max(worst_d, float(np.max(np.abs(got - np.sort_complex(d)))))
    return DecompositionReport(count, mism, worst_c, worst_r, worst_d)
