"""Bound chain along perturbations of ``[1] (+) [[0, 1], [0, 0]]``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from ..matcore import op_norm
from ..ratio import CEILING, KNOWN, ratio_lb_poly
from ..structure import Contour, induction_bound_check
from .families import block_reference, random_direction


@dataclass
class InductionConfig:
    n_list: Sequence[int] = (10, 100, 1000)
    seed: int = 7
    degree: int = 8
    grid: int = 1024
    restarts: int = 8
    contour_u: Contour = field(default_factory=lambda: Contour(1.0, 0.45, 64))
    contour_v: Contour = field(default_factory=lambda: Contour(0.0, 0.45, 64))


@dataclass
class InductionReport:
    rows: List[dict]
    c_prev: float

    @property
    def passed(self):
        return all(r["holds"] and r["psi_lb"] < CEILING for r in self.rows)

    def to_dict(self):
        return {"rows": self.rows, "c_prev": self.c_prev, "passed": self.passed}

    def tables(self):
        keys = ["n", "psi_lb", "cond", "bound", "s_minus_identity", "off_block_residual"]
        return {"induction": (keys, [[r[k] for k in keys] for r in self.rows])}


def induction_sweep(config: Optional[InductionConfig] = None) -> InductionReport:
    """One row per perturbation size plus the unperturbed row (``n = inf``).

    Each row builds S_n from the Riesz projections, estimates the ratio of
    T_n and checks ``estimate <= cond(S_n)^2 * C_2``; any failure raises.
    """
    cfg = config or InductionConfig()
    t = block_reference()
    e = random_direction(3, cfg.seed)
    c_prev = KNOWN.lower(2)
    rows = []
    for n in [None, *cfg.n_list]:
        t_n = t if n is None else t + e / n
        est = ratio_lb_poly(t_n, cfg.degree, cfg.grid, cfg.restarts, cfg.seed)
        rep = induction_bound_check(t, t_n, est, c_prev, cfg.contour_u, cfg.contour_v)
        row = {"n": "inf" if n is None else int(n), **rep.to_dict()}
        row["s_minus_identity_times_n"] = None if n is None else row["s_minus_identity"] * n
        row["t_n_norm"] = op_norm(t_n)
        rows.append(row)
    return InductionReport(rows, c_prev)
