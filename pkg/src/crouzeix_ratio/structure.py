"""Boundary-eigenvalue splitting and spectral-projection similarities.

``boundary_split`` puts the eigenvalues lying on the boundary of W(A) first
in a Schur form; their rows then decouple, giving A ~ D (+) A_tilde with D
diagonal. ``similarity_construction`` builds S_n = P_n P + Q_n Q from Riesz
projections, which block-diagonalises a perturbation T_n of a block
diagonal T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from .errors import BoundCheckError, ConsistencyError, ContourError, DegeneracyError
from .matcore import as_cmatrix, complex_schur, op_norm, reorder_schur, resolvent
from .numrange import DEFAULT_GRID, EigClassification, build_range, classify_spectrum
from .ratio import RatioEstimate

COND_MAX = 1e12
GUARD = 0.05


@dataclass(frozen=True)
class SplitResult:
    unitary: np.ndarray
    d_block: np.ndarray
    a_tilde: np.ndarray
    classification: List[EigClassification]
    coupling_residual: float
    retries: int = 0

    @property
    def k(self):
        return self.d_block.shape[0]

    def blocks(self):
        """``D (+) A_tilde`` as one matrix."""
        n = self.unitary.shape[0]
        out = np.zeros((n, n), dtype=complex)
        out[: self.k, : self.k] = self.d_block
        out[self.k :, self.k :] = self.a_tilde
        return out

    def reconstruct(self):
        return self.unitary @ self.blocks() @ self.unitary.conj().T

    def to_dict(self):
        d = np.diag(self.d_block)
        return {
            "k": self.k,
            "d_re": d.real.tolist(),
            "d_im": d.imag.tolist(),
            "a_tilde_re": self.a_tilde.real.tolist(),
            "a_tilde_im": self.a_tilde.imag.tolist(),
            "classification": [
                {"re": c.eigenvalue.real, "im": c.eigenvalue.imag, "margin": c.margin, "label": c.label}
                for c in self.classification
            ],
            "coupling_residual": self.coupling_residual,
            "retries": self.retries,
        }


def boundary_split(a, tol: float = 1e-8, m: int = DEFAULT_GRID, class_tol=None) -> SplitResult:
    """Unitary splitting ``A = U (D (+) A_tilde) U^*`` with boundary eigenvalues in D.

    ``tol`` bounds the coupling rows relative to ``||A||``. An eigenvalue
    whose row couples more than that is demoted to interior and the split
    is retried (at most n times) before a ConsistencyError.
    """
    a = as_cmatrix(a)
    n = a.shape[0]
    nrm = op_norm(a)
    r = build_range(a, m)
    # classify_spectrum reads eigenvalues off this same (deterministic) Schur form
    labels = classify_spectrum(a, r, class_tol)
    sf = complex_schur(a)
    for retry in range(n + 1):
        keys = [1.0 if c.on_boundary else 0.0 for c in labels]
        q, t, perm = reorder_schur(sf.q, sf.t, keys)
        k = int(sum(keys))
        coupling = np.triu(np.abs(t[:k, :]), 1)
        row_max = coupling.max(axis=1) if k else np.zeros(0)
        resid = float(row_max.max()) if k else 0.0
        if resid <= tol * max(nrm, 1e-300):
            ordered = [labels[i] for i in perm]
            d_block = np.diag(np.diag(t[:k, :k]))
            return SplitResult(q, d_block, t[k:, k:].copy(), ordered, resid, retry)
        worst = perm[int(np.argmax(row_max))]
        c = labels[worst]
        labels[worst] = EigClassification(c.eigenvalue, c.margin, "interior")
    raise ConsistencyError(
        f"coupling residual {resid:.3g} exceeds {tol:g}*||A|| after {n} reclassifications"
    )


def iterated_split(a, tol: float = 1e-8, m: int = DEFAULT_GRID):
    """Repeat ``boundary_split`` on the interior block until its spectrum is interior to its own range.

    Returns ``(d_total, core, unitary, iterations)`` with
    ``A = unitary (d_total (+) core) unitary^*``.
    """
    a = as_cmatrix(a)
    n = a.shape[0]
    u_total = np.eye(n, dtype=complex)
    diag_vals = []
    core = a
    iterations = 0
    offset = 0
    while core.shape[0] > 0 and iterations < n:
        split = boundary_split(core, tol, m)
        if split.k == 0:
            break
        iterations += 1
        diag_vals.extend(np.diag(split.d_block))
        u_total[:, offset:] = u_total[:, offset:] @ split.unitary
        offset += split.k
        core = split.a_tilde
    return np.diag(np.array(diag_vals, dtype=complex)), core, u_total, iterations


# -- spectral projections -------------------------------------------------------


@dataclass(frozen=True)
class Contour:
    """Circle ``|z - center| = radius`` sampled at ``nodes`` trapezoid points."""

    center: complex
    radius: float
    nodes: int = 64

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "nodes", int(self.nodes))
        if not self.radius > 0:
            raise ContourError("contour radius must be positive")
        if self.nodes < 16:
            raise ContourError("contour needs at least 16 nodes")

    def encloses(self, z):
        return np.abs(np.asarray(z) - self.center) < self.radius

    def separation(self, z):
        """Distance of each point to the circle, in units of the radius."""
        return np.abs(np.abs(np.asarray(z) - self.center) - self.radius) / self.radius

    def to_dict(self):
        return {"center": [self.center.real, self.center.imag], "radius": self.radius, "nodes": self.nodes}


def _eigs(a):
    return np.linalg.eigvals(a)


def riesz_projection(a, c: Contour) -> np.ndarray:
    """Trapezoid rule for ``(1 / 2 pi i) \\oint (zI - A)^{-1} dz`` over the circle."""
    a = as_cmatrix(a)
    eigs = _eigs(a)
    if np.any(c.separation(eigs) < GUARD):
        raise ContourError("an eigenvalue lies within the contour's separation guard")
    phi = 2 * np.pi * np.arange(c.nodes) / c.nodes
    w = c.radius * np.exp(1j * phi)
    acc = np.zeros_like(a)
    # ordered summation keeps the result deterministic
    for wk in w:
        acc = acc + wk * resolvent(a, c.center + wk)
    return acc / c.nodes


@dataclass(frozen=True)
class SimilarityResult:
    p_proj: np.ndarray
    q_proj: np.ndarray
    s: np.ndarray
    s_inv: np.ndarray
    cond: float
    off_block_residual: float
    p_ref: np.ndarray
    q_ref: np.ndarray

    def to_dict(self):
        n = self.s.shape[0]
        return {
            "cond": self.cond,
            "off_block_residual": self.off_block_residual,
            "s_minus_identity": op_norm(self.s - np.eye(n)),
            "idempotency": max(op_norm(self.p_proj @ self.p_proj - self.p_proj),
                               op_norm(self.q_proj @ self.q_proj - self.q_proj)),
            "cross": max(op_norm(self.p_proj @ self.q_proj), op_norm(self.q_proj @ self.p_proj)),
        }


def similarity_construction(t, t_n, c_u: Contour, c_v: Contour, p_ref=None, q_ref=None) -> SimilarityResult:
    """``S_n = P_n P + Q_n Q`` with ``S_n^{-1} T_n S_n`` block diagonal w.r.t. ``T``'s splitting.

    ``P``/``Q`` (projections of ``T``) default to the same Riesz quadrature.
    """
    t = as_cmatrix(t, "t")
    t_n = as_cmatrix(t_n, "t_n")
    if t.shape != t_n.shape:
        raise ContourError("t and t_n must have the same shape")
    if abs(c_u.center - c_v.center) <= c_u.radius + c_v.radius:
        raise ContourError("contours must bound disjoint disks")
    for name, mat in (("t", t), ("t_n", t_n)):
        eigs = _eigs(mat)
        inside = c_u.encloses(eigs) | c_v.encloses(eigs)
        if not np.all(inside):
            raise ContourError(f"spectrum of {name} not covered by the two contours")
    if p_ref is None:
        p_ref = riesz_projection(t, c_u)
    if q_ref is None:
        q_ref = riesz_projection(t, c_v)
    p_n = riesz_projection(t_n, c_u)
    q_n = riesz_projection(t_n, c_v)
    s = p_n @ p_ref + q_n @ q_ref
    sv = np.linalg.svd(s, compute_uv=False)
    cond = float(sv[0] / sv[-1]) if sv[-1] > 0 else np.inf
    if not cond < COND_MAX:
        raise DegeneracyError(f"S_n numerically singular (cond {cond:.3g})")
    s_inv = np.linalg.inv(s)
    m = s_inv @ t_n @ s
    off = max(op_norm(q_ref @ m @ p_ref), op_norm(p_ref @ m @ q_ref))
    return SimilarityResult(p_n, q_n, s, s_inv, cond, off, p_ref, q_ref)


@dataclass(frozen=True)
class BoundReport:
    psi_lb: float
    cond: float
    c_prev: float
    bound: float
    holds: bool
    similarity: SimilarityResult

    def to_dict(self):
        return {"psi_lb": self.psi_lb, "cond": self.cond, "c_prev": self.c_prev,
                "bound": self.bound, "holds": self.holds, **self.similarity.to_dict()}


def induction_bound_check(t, t_n, est_n: RatioEstimate, c_prev: float, c_u: Contour, c_v: Contour,
                          slack=1e-6) -> BoundReport:
    """Check ``estimate <= cond(S_n)^2 * C_prev``; raises BoundCheckError otherwise.

    ``cond`` is ``||S_n|| ||S_n^{-1}||`` for the similarity built from the two
    contours. The estimate is a lower bound on the ratio of ``t_n``, so the
    inequality must hold for it as well.
    """
    sim = similarity_construction(t, t_n, c_u, c_v)
    bound = sim.cond**2 * c_prev
    holds = est_n.value <= bound + slack
    if not holds:
        raise BoundCheckError(f"estimate {est_n.value:.9f} exceeds cond^2 * C_prev = {bound:.9f}")
    return BoundReport(est_n.value, sim.cond, c_prev, bound, holds, sim)
