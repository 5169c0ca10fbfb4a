"""The alpha family: a jump of the ratio at a non-scalar matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence

from ..functions import TanhStrip
from ..ratio import CEILING, ratio_lb_candidate, ratio_lb_poly
from ..errors import InputError
from .families import alpha_matrix


@dataclass
class DiscontinuityConfig:
    degree: int = 8
    grid: int = 1024
    restarts: int = 8
    seed: int = 7
    tol: float = 1e-6
    poly: bool = True


@dataclass
class DiscontinuityReport:
    alphas: List[float]
    psi_candidate: List[float]
    psi_poly: List[float]
    psi_a0: float
    gaps: List[float]
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def to_dict(self):
        return {
            "alphas": self.alphas,
            "psi_candidate": self.psi_candidate,
            "psi_poly": self.psi_poly,
            "psi_a0": self.psi_a0,
            "gaps": self.gaps,
            "checks": self.checks,
            "passed": self.passed,
        }

    def tables(self):
        rows = [[a, c, p] for a, c, p in zip(self.alphas, self.psi_candidate, self.psi_poly)]
        return {"alpha_sweep": (["alpha", "psi_candidate", "psi_poly"], rows)}


def discontinuity_demo(alphas: Sequence[float] = (1, 0.5, 0.25, 0.125), config=None) -> DiscontinuityReport:
    """Estimates for A_alpha (tanh strip witness and polynomial search) against A_0.

    Checks: every candidate value >= pi/2 - 1e-9, every value below 2 + 1e-6
    (the polynomial value is a lower bound, the limsup at A_0 is at most 2),
    the A_0 estimate equals 1, and each gap exceeds pi/2 - 1 - tol.
    """
    cfg = config or DiscontinuityConfig()
    alphas = [float(a) for a in alphas]
    if any(not a > 0 for a in alphas):
        raise InputError("alphas must be positive")
    psi_a0 = ratio_lb_poly(alpha_matrix(0.0), cfg.degree, cfg.grid, cfg.restarts, cfg.seed).value
    cand, poly, gaps = [], [], []
    for a in alphas:
        mat = alpha_matrix(a)
        c = ratio_lb_candidate(mat, TanhStrip(a), cfg.grid).value
        p = ratio_lb_poly(mat, cfg.degree, cfg.grid, cfg.restarts, cfg.seed).value if cfg.poly else float("nan")
        cand.append(c)
        poly.append(p)
        gaps.append(max(c, p if cfg.poly else c) - psi_a0)
    checks = {
        "psi_a0_is_one": abs(psi_a0 - 1.0) <= 1e-9,
        "candidate_at_least_half_pi": all(c >= math.pi / 2 - 1e-9 for c in cand),
        "below_two": all(v < 2 + 1e-6 for v in cand + ([p for p in poly] if cfg.poly else [])),
        "below_ceiling": all(v < CEILING for v in cand + (poly if cfg.poly else [])),
        "gap": all(g >= math.pi / 2 - 1 - cfg.tol for g in gaps),
    }
    return DiscontinuityReport(alphas, cand, poly, psi_a0, gaps, checks)
