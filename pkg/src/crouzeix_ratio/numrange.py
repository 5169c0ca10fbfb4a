"""Numerical range W(A) via its support function.

For a direction ``theta`` the support value ``max Re(exp(-i theta) z)`` over
W(A) is the top eigenvalue of the Hermitian part of ``exp(-i theta) A``, and
the Rayleigh quotient of a top eigenvector is a point of W(A) on the
supporting line. Sampling a uniform angle grid gives an inner polygon (hull
of those points) and an outer polygon (intersection of the halfplanes).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List

import numpy as np
from scipy.optimize import minimize_scalar

from . import polygon as pg
from .errors import InputError
from .matcore import as_cmatrix, complex_schur, hermitian_eigs

DEFAULT_GRID = 1024


class Membership(str, Enum):
    INSIDE = "inside_certified"
    OUTSIDE = "outside_certified"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class RangeModel:
    thetas: np.ndarray
    support: np.ndarray
    boundary_pts: np.ndarray
    inner_polygon: np.ndarray
    outer_polygon: np.ndarray

    @property
    def m(self):
        return self.thetas.size

    @property
    def diameter(self):
        return pg.diameter(self.outer_polygon)

    @property
    def centroid(self):
        return complex(np.mean(self.outer_polygon))

    @property
    def radius(self):
        """Largest distance from the centroid to an outer vertex."""
        return float(np.max(np.abs(self.outer_polygon - self.centroid)))


@dataclass(frozen=True)
class EigClassification:
    eigenvalue: complex
    margin: float
    label: str  # "interior" or "boundary"

    @property
    def on_boundary(self):
        return self.label == "boundary"


def _hermitian_parts(a):
    h1 = 0.5 * (a + a.conj().T)
    h2 = (a - a.conj().T) / 2j
    return h1, h2


def support_point(a, theta):
    """Support value and a boundary point of W(a) in direction ``theta``."""
    a = as_cmatrix(a)
    rot = np.exp(-1j * theta) * a
    w, v = hermitian_eigs(0.5 * (rot + rot.conj().T))
    x = v[:, 0]
    return float(w[0]), complex(x.conj() @ a @ x)


def _support_batch(a, thetas):
    h1, h2 = _hermitian_parts(a)
    c = np.cos(thetas)[:, None, None]
    s = np.sin(thetas)[:, None, None]
    w, v = np.linalg.eigh(c * h1 + s * h2)
    x = v[:, :, -1]
    pts = np.einsum("ki,ij,kj->k", x.conj(), a, x)
    return w[:, -1], pts


def theta_grid(m):
    return 2 * np.pi * np.arange(m) / m


def build_range(a, m: int = DEFAULT_GRID, thetas=None) -> RangeModel:
    """Sample the support function of W(a) on a uniform grid of ``m`` angles."""
    a = as_cmatrix(a)
    if thetas is None:
        if m < 8:
            raise InputError("build_range needs m >= 8")
        thetas = theta_grid(m)
    else:
        thetas = np.sort(np.mod(np.asarray(thetas, dtype=float), 2 * np.pi))
        if thetas.size < 8 or np.max(np.diff(np.append(thetas, thetas[0] + 2 * np.pi))) >= np.pi / 2:
            raise InputError("custom angle grid too coarse")
    support, pts = _support_batch(a, thetas)
    # the boundary point lies on its supporting line exactly; snap rounding
    rot = np.exp(-1j * thetas)
    pts = pts + (support - (rot * pts).real) * np.conj(rot)
    inner = pg.convex_hull(pts)
    outer = pg.halfplane_polygon(thetas, support)
    for arr in (thetas, support, pts, inner, outer):
        arr.setflags(write=False)
    return RangeModel(thetas, support, pts, inner, outer)


def refine_range(a, r: RangeModel) -> RangeModel:
    """Same model on a grid with twice as many angles (old angles kept)."""
    mids = r.thetas + np.pi / r.m
    return build_range(a, thetas=np.concatenate([r.thetas, mids]))


def halfplane_slack(r: RangeModel, z):
    """``min_k support_k - Re(exp(-i theta_k) z)``; negative outside."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    vals = r.support[None, :] - (np.exp(-1j * r.thetas)[None, :] * z[:, None]).real
    return vals.min(axis=1)


def contains(r: RangeModel, z, tol=None) -> Membership:
    """Certified membership of ``z`` in W(A) from the polygon sandwich."""
    if tol is None:
        tol = 1e-12 * (1 + r.diameter)
    z = complex(z)
    if halfplane_slack(r, z)[0] < -tol:
        return Membership.OUTSIDE
    if r.inner_polygon.size <= 2:
        degenerate_tol = 1e-8 * (1 + r.diameter)
        if bool(pg.contains_point(r.inner_polygon, np.asarray(z), tol=degenerate_tol)):
            return Membership.INSIDE
        return Membership.UNDECIDED
    if bool(pg.contains_point(r.inner_polygon, np.asarray(z), tol=0.0)):
        return Membership.INSIDE
    return Membership.UNDECIDED


def default_tol(r: RangeModel) -> float:
    return 1e-8 * (1 + r.diameter)


def eigen_margin(a, r: RangeModel, lam, refine=True) -> float:
    """Support margin of an eigenvalue, refined off-grid around the grid minimiser.

    Extra angles only lower the minimum, so refinement never increases it.
    """
    g = halfplane_slack(r, lam)[0]
    if not refine:
        return float(g)
    slack = r.support - (np.exp(-1j * r.thetas) * lam).real
    k = int(np.argmin(slack))
    step = 2 * np.pi / r.m

    def fun(th):
        return support_point(a, th)[0] - (np.exp(-1j * th) * lam).real

    res = minimize_scalar(
        fun,
        bounds=(r.thetas[k] - step, r.thetas[k] + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(min(g, res.fun))


def classify_spectrum(a, r: RangeModel, tol=None) -> List[EigClassification]:
    """Label each eigenvalue boundary (margin <= tol) or interior."""
    a = as_cmatrix(a)
    if tol is None:
        tol = default_tol(r)
    eigs = complex_schur(a).eigenvalues
    out = []
    for lam in eigs:
        margin = eigen_margin(a, r, lam)
        label = "interior" if margin > tol else "boundary"
        out.append(EigClassification(complex(lam), margin, label))
    return out
