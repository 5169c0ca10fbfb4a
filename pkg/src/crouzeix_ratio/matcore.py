"""Dense complex linear algebra for small matrices (n <= 64).

Matrices are plain ``numpy`` arrays of dtype ``complex128``; ``as_cmatrix``
is the single validation gate. The heavy lifting is delegated to LAPACK
through numpy/scipy.
"""

from __future__ import annotations

import warnings

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.linalg as sla

from .errors import ConvergenceError, DomainError, InputError, SingularityError
from .functions import AnalyticFunction
from .polynomial import Polynomial

MAX_DIM = 64
HERMITIAN_TOL = 1e-12
CLUSTER_TOL = 1e-6
TAYLOR_TERMS = 30
RESOLVENT_COND_MAX = 1e12


def as_cmatrix(a, name="matrix") -> np.ndarray:
    """Validate and convert to a square finite complex128 array."""
    try:
        arr = np.array(a, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{name}: cannot convert to a complex array ({exc})") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InputError(f"{name}: expected a non-empty square matrix, got shape {arr.shape}")
    if arr.shape[0] > MAX_DIM:
        raise InputError(f"{name}: dimension {arr.shape[0]} exceeds {MAX_DIM}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name}: entries must be finite")
    return arr


def op_norm(a) -> float:
    """Operator 2-norm (largest singular value)."""
    a = as_cmatrix(a)
    return float(np.linalg.norm(a, 2))


def hermitian_eigs(h):
    """Eigen-decomposition of a Hermitian matrix, eigenvalues descending.

    Returns ``(w, v)`` with ``h @ v[:, k] == w[k] * v[:, k]``.
    """
    h = as_cmatrix(h)
    scale = max(op_norm(h), 1e-300)
    if op_norm(h - h.conj().T) > HERMITIAN_TOL * scale:
        raise InputError("hermitian_eigs: matrix is not Hermitian")
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    return w[::-1].copy(), v[:, ::-1].copy()


def is_normal(a, tol=1e-12) -> bool:
    a = as_cmatrix(a)
    nrm = op_norm(a)
    if nrm == 0:
        return True
    comm = a @ a.conj().T - a.conj().T @ a
    return op_norm(comm) <= tol * nrm**2


def is_scalar(a, tol=1e-14) -> bool:
    a = as_cmatrix(a)
    mu = np.trace(a) / a.shape[0]
    return op_norm(a - mu * np.eye(a.shape[0])) <= tol * max(abs(mu), op_norm(a), 1e-300)


@dataclass(frozen=True)
class SchurForm:
    """``a = q @ t @ q^*`` with ``t`` upper triangular.

    ``ordering[i]`` is the position on the unreordered LAPACK diagonal of the
    eigenvalue that now sits at ``t[i, i]``.
    """

    q: np.ndarray
    t: np.ndarray
    ordering: tuple

    @property
    def eigenvalues(self):
        return np.diag(self.t).copy()


def _swap_adjacent(q, t, i):
    """Swap diagonal entries i, i+1 of upper triangular t by a unitary rotation."""
    t11, t12, t22 = t[i, i], t[i, i + 1], t[i + 1, i + 1]
    x = np.array([t12, t22 - t11])
    nx = np.linalg.norm(x)
    if nx == 0:
        return
    c1 = x / nx
    z = np.array([[c1[0], -np.conj(c1[1])], [c1[1], np.conj(c1[0])]])
    t[:, i : i + 2] = t[:, i : i + 2] @ z
    t[i : i + 2, :] = z.conj().T @ t[i : i + 2, :]
    q[:, i : i + 2] = q[:, i : i + 2] @ z
    t[i + 1, i] = 0.0
    t[i, i], t[i + 1, i + 1] = t22, t11


def reorder_schur(q, t, keys):
    """Stable reordering so that ``keys`` is non-increasing along the diagonal.

    ``keys`` holds one real per current diagonal position. Returns new
    ``(q, t, perm)`` where ``perm[i]`` is the old position now at ``i``.
    """
    q = q.copy()
    t = t.copy()
    keys = list(keys)
    perm = list(range(len(keys)))
    n = len(keys)
    # insertion sort by adjacent swaps keeps equal keys in their original order
    for j in range(1, n):
        i = j
        while i > 0 and keys[i - 1] < keys[i]:
            _swap_adjacent(q, t, i - 1)
            keys[i - 1], keys[i] = keys[i], keys[i - 1]
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            i -= 1
    return q, np.triu(t), perm


def complex_schur(a, order_key: Optional[Callable[[complex], float]] = None) -> SchurForm:
    """Complex Schur form with an optional eigenvalue ordering.

    ``order_key`` maps an eigenvalue to a real; the diagonal of ``t`` is
    arranged so that the key is non-increasing (ties keep LAPACK order).
    """
    a = as_cmatrix(a)
    try:
        t, q = sla.schur(a, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceError(f"complex_schur: QR iteration failed ({exc})") from exc
    t = np.triu(t)
    perm = list(range(a.shape[0]))
    if order_key is not None:
        keys = [float(order_key(lam)) for lam in np.diag(t)]
        q, t, perm = reorder_schur(q, t, keys)
    resid = op_norm(q @ t @ q.conj().T - a)
    if resid > 1e-10 * max(op_norm(a), 1e-300) and op_norm(a) > 0:
        raise ConvergenceError("complex_schur: reconstruction residual too large", resid)
    return SchurForm(q, t, tuple(perm))


def eval_poly(a, p: Polynomial) -> np.ndarray:
    """Horner evaluation of ``p(a)``."""
    a = as_cmatrix(a)
    n = a.shape[0]
    eye = np.eye(n, dtype=complex)
    x = (a - p.center * eye) / p.scale
    out = p.coeffs[-1] * eye
    for c in p.coeffs[-2::-1]:
        out = out @ x + c * eye
    return out


def _clusters(diag, tol):
    """Group diagonal entries closer than ``tol`` (transitively)."""
    n = diag.size
    label = list(range(n))

    def find(i):
        while label[i] != i:
            label[i] = label[label[i]]
            i = label[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(diag[i] - diag[j]) < tol:
                label[find(i)] = find(j)
    roots = [find(i) for i in range(n)]
    order = {}
    for r in roots:
        order.setdefault(r, len(order))
    return np.array([order[r] for r in roots])


def eval_fn(a, f: AnalyticFunction) -> np.ndarray:
    """Evaluate a registry function at a matrix by block Schur-Parlett.

    Diagonal entries closer than 1e-6 form a block evaluated by a 30-term
    Taylor series about the block mean; off-diagonal blocks follow from the
    block Parlett recurrence (Sylvester solves).
    """
    a = as_cmatrix(a)
    sf = complex_schur(a)
    f.check_domain(sf.eigenvalues, "eigenvalue")
    labels = _clusters(np.diag(sf.t), CLUSTER_TOL)
    # contiguous clusters: lower label first
    q, t, perm = reorder_schur(sf.q, sf.t, [-float(k) for k in labels])
    labels = labels[perm]
    bounds = np.flatnonzero(np.diff(np.concatenate([[-1], labels, [labels.max() + 1]])))
    blocks = [slice(bounds[k], bounds[k + 1]) for k in range(len(bounds) - 1)]
    n = a.shape[0]
    fm = np.zeros((n, n), dtype=complex)
    for blk in blocks:
        tb = t[blk, blk]
        mu = np.mean(np.diag(tb))
        coef = f.taylor(mu, TAYLOR_TERMS)
        shifted = tb - mu * np.eye(tb.shape[0])
        acc = coef[-1] * np.eye(tb.shape[0], dtype=complex)
        for c in coef[-2::-1]:
            acc = acc @ shifted + c * np.eye(tb.shape[0])
        fm[blk, blk] = acc
    for j in range(len(blocks)):
        bj = blocks[j]
        for i in range(j - 1, -1, -1):
            bi = blocks[i]
            rhs = fm[bi, bi] @ t[bi, bj] - t[bi, bj] @ fm[bj, bj]
            for k in range(i + 1, j):
                bk = blocks[k]
                rhs += fm[bi, bk] @ t[bk, bj] - t[bi, bk] @ fm[bk, bj]
            fm[bi, bj] = sla.solve_sylvester(t[bi, bi], -t[bj, bj], rhs)
    return q @ fm @ q.conj().T


def resolvent(a, z) -> np.ndarray:
    """``(z I - a)^{-1}`` with a conditioning guard near the spectrum."""
    a = as_cmatrix(a)
    m = complex(z) * np.eye(a.shape[0]) - a
    try:
        with warnings.catch_warnings():
            # an exactly singular pivot is reported below as SingularityError
            warnings.simplefilter("ignore", sla.LinAlgWarning)
            lu = sla.lu_factor(m, check_finite=False)
    except (ValueError, np.linalg.LinAlgError) as exc:
        raise SingularityError(f"resolvent: zI - A singular at z={z}") from exc
    if np.any(np.diag(lu[0]) == 0):
        raise SingularityError(f"resolvent: zI - A singular at z={z}")
    r = sla.lu_solve(lu, np.eye(a.shape[0], dtype=complex))
    cond = np.linalg.norm(m, 1) * np.linalg.norm(r, 1)
    if not np.isfinite(cond) or cond > RESOLVENT_COND_MAX:
        raise SingularityError(f"resolvent: condition estimate {cond:.3g} at z={z}")
    return r
