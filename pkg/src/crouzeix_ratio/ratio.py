"""Certified lower bounds on the Crouzeix ratio.

Every estimate has the form ``||f(A)|| / S`` where ``S`` is a certified upper
bound of ``|f|`` over a set containing W(A) (the outer polygon, or a larger
neighbourhood). Because the set is a superset, the quotient never exceeds
the true ratio, whatever the optimizer did.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from scipy.optimize import minimize

from . import polygon as pg
from .errors import CeilingViolation, ContainmentError, DomainError, InputError
from .functions import AnalyticFunction, Disk
from .matcore import as_cmatrix, eval_fn, eval_poly, is_normal, is_scalar, op_norm
from .numrange import DEFAULT_GRID, build_range
from .polynomial import Polynomial

CEILING = 1.0 + math.sqrt(2.0)
FLOOR_SLACK = 1e-9


@dataclass(frozen=True)
class KnownConstants:
    """Known values and bounds of C_N, the sup of the ratio over N x N matrices."""

    exact: dict = field(default_factory=lambda: {1: 1.0, 2: 2.0})

    def lower(self, n: int) -> float:
        if n < 1:
            raise InputError("C_N is defined for N >= 1")
        if n in self.exact:
            return self.exact[n]
        # C_N is nondecreasing in N
        return max(v for k, v in self.exact.items() if k <= n)

    def upper(self, n: int) -> float:
        if n in self.exact:
            return self.exact[n]
        return CEILING

    def is_exact(self, n: int) -> bool:
        return n in self.exact


KNOWN = KnownConstants()


@dataclass(frozen=True)
class RatioEstimate:
    value: float
    witness: Union[Polynomial, AnalyticFunction]
    cert_sup: float
    witness_norm: float
    grid_m: int
    restarts: int = 0
    seed: Optional[int] = None
    degree: Optional[int] = None
    flags: tuple = ()
    kind: str = "polynomial"

    def __post_init__(self):
        if not self.value < CEILING:
            raise CeilingViolation(
                f"estimate {self.value!r} reached the 1 + sqrt(2) ceiling ({self.kind})"
            )

    def to_dict(self) -> dict:
        w = self.witness.to_dict()
        out = {
            "value": self.value,
            "cert_sup": self.cert_sup,
            "witness_norm": self.witness_norm,
            "grid": self.grid_m,
            "restarts": self.restarts,
            "seed": self.seed,
            "degree": self.degree,
            "flags": list(self.flags),
            "kind": self.kind,
            "ceiling_check": "pass",
            "witness": w,
        }
        if isinstance(self.witness, Polynomial):
            out["witness_coeffs_re"] = w["coeffs_re"]
            out["witness_coeffs_im"] = w["coeffs_im"]
        return out


def _unit_estimate(m, restarts=0, seed=None, degree=None, flags=(), kind="polynomial"):
    return RatioEstimate(1.0, Polynomial.constant(1.0), 1.0, 1.0, m, restarts, seed, degree, tuple(flags), kind)


# -- optimizer ------------------------------------------------------------------


class _RatioObjective:
    """``log max_k |q(zeta_k)| - log ||q(B)||`` and its (sub)gradient."""

    def __init__(self, b, samples, degree):
        n = b.shape[0]
        self.powers = np.empty((degree + 1, n, n), dtype=complex)
        self.powers[0] = np.eye(n)
        for j in range(1, degree + 1):
            self.powers[j] = self.powers[j - 1] @ b
        self.vander = samples[:, None] ** np.arange(degree + 1)[None, :]
        self.d1 = degree + 1

    def split(self, x):
        return x[: self.d1] + 1j * x[self.d1 :]

    def __call__(self, x):
        c = self.split(x)
        mat = np.tensordot(c, self.powers, axes=1)
        u, s, vh = np.linalg.svd(mat)
        sigma = s[0]
        pv = self.vander @ c
        k = int(np.argmax(np.abs(pv)))
        smax = abs(pv[k])
        if sigma <= 0 or smax <= 0:
            return np.inf, np.zeros_like(x)
        g = np.einsum("i,jik,k->j", u[:, 0].conj(), self.powers, vh[0].conj())
        h = np.conj(pv[k]) * self.vander[k]
        grad_re = h.real / smax**2 - g.real / sigma
        grad_im = -h.imag / smax**2 + g.imag / sigma
        return math.log(smax) - math.log(sigma), np.concatenate([grad_re, grad_im])


def _optimize(b, samples, degree, restarts, seed, maxiter, inits=()):
    obj = _RatioObjective(b, samples, degree)
    rng = np.random.default_rng(seed)
    starts = [np.asarray(c, dtype=complex) for c in inits]
    ident = np.zeros(degree + 1, dtype=complex)
    ident[min(1, degree)] = 1.0
    starts.append(ident)
    while len(starts) < restarts + len(inits):
        starts.append(rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1))
    found = []
    for c0 in starts[: max(restarts, 1) + len(inits)]:
        x0 = np.concatenate([c0.real, c0.imag])
        res = minimize(obj, x0, jac=True, method="BFGS", options={"maxiter": maxiter, "gtol": 1e-10})
        x = res.x if np.all(np.isfinite(res.x)) else x0
        found.append(obj.split(x))
    return found


def _certified(a, coeffs, center, scale, poly):
    p = Polynomial(coeffs, center, scale)
    cert, _ = pg.certified_poly_sup(p, poly)
    nrm = op_norm(eval_poly(a, p))
    return p, cert, nrm


def _best_polynomial(a, boundary, center, scale, degree, restarts, seed, maxiter, warm_start, m, kind):
    b = (a - center * np.eye(a.shape[0])) / scale
    mids = 0.5 * (boundary + np.roll(boundary, -1))
    samples = (np.concatenate([boundary, mids]) - center) / scale
    inits = []
    if warm_start is not None:
        inits.append(_rebase(warm_start, center, scale, degree))
    candidates = _optimize(b, samples, degree, restarts, seed, maxiter, inits)
    best = _unit_estimate(m, restarts, seed, degree, kind=kind)
    for c in candidates:
        p, cert, nrm = _certified(a, c, center, scale, boundary)
        if cert <= 0 or not np.isfinite(cert):
            continue
        value = nrm / cert
        # strict comparison: ties go to the earliest candidate
        if value > best.value:
            best = RatioEstimate(value, p, cert, nrm, m, restarts, seed, degree, (), kind)
    return best


def _rebase(p: Polynomial, center, scale, degree):
    """Coefficients of ``p`` in the basis ((z - center) / scale)^k, padded."""
    if p.degree > degree:
        raise InputError("warm start has a higher degree than requested")
    if p.center == center and p.scale == scale:
        return p.padded(degree).coeffs
    # p(z) = q(zeta') with zeta' = (z - c0)/s0 = (scale * zeta + center - c0)/s0
    lin = np.array([(center - p.center) / p.scale, scale / p.scale])
    out = np.zeros(degree + 1, dtype=complex)
    power = np.ones(1, dtype=complex)
    for c in p.coeffs:
        out[: power.size] += c * power
        power = np.convolve(power, lin)
    return out


# -- public operations -------------------------------------------------------


def ratio_lb_poly(
    a,
    degree: int = 8,
    m: int = DEFAULT_GRID,
    restarts: int = 32,
    seed: int = 7,
    maxiter: int = 500,
    warm_start: Optional[Polynomial] = None,
) -> RatioEstimate:
    """Best certified ``||p(A)|| / sup_{outer polygon} |p|`` over degree-``degree`` polynomials.

    Random restarts of a BFGS ascent on the (nonsmooth) quotient, in the
    variable ``(z - c) / r`` adapted to W(A). Normal and scalar matrices are
    answered exactly (value 1 with ``p = 1``). ``warm_start`` adds an extra
    start, so a degree ``d`` witness passed to degree ``d + 1`` can only help.
    """
    a = as_cmatrix(a)
    if degree < 1:
        raise InputError("ratio_lb_poly needs degree >= 1")
    if m < 64:
        raise InputError("ratio_lb_poly needs m >= 64")
    if is_scalar(a):
        return _unit_estimate(m, restarts, seed, degree, flags=("degenerate", "scalar"))
    if is_normal(a):
        return _unit_estimate(m, restarts, seed, degree, flags=("normal",))
    r = build_range(a, m)
    center, scale = r.centroid, r.radius
    return _best_polynomial(
        a, r.outer_polygon, center, scale, degree, restarts, seed, maxiter, warm_start, m, "polynomial"
    )


def ratio_lb_candidate(a, f: AnalyticFunction, m: int = DEFAULT_GRID) -> RatioEstimate:
    """``||f(A)|| / sup_{outer polygon} |f|`` for a registry function, floored at 1."""
    a = as_cmatrix(a)
    r = build_range(a, m)
    if not f.domain.contains_polygon(r.outer_polygon):
        raise DomainError(f"outer polygon of W(A) leaves the domain {f.domain.describe()} of {f.name}")
    fa = eval_fn(a, f)
    cert = float(f.sup_bound(r.outer_polygon))
    nrm = op_norm(fa)
    if not (np.isfinite(cert) and cert > 0):
        return _unit_estimate(m, kind="candidate", flags=("unbounded_candidate",))
    value = nrm / cert
    if value < 1.0:
        return _unit_estimate(m, kind="candidate", flags=("floor",))
    return RatioEstimate(value, f, cert, nrm, m, kind="candidate")


def certify_witness(a, p: Polynomial, m: int = DEFAULT_GRID) -> RatioEstimate:
    """Certified ``||p(A)|| / sup |p|`` over the outer polygon for a given polynomial.

    No search; used to transport a witness between related matrices, e.g.
    ``est.witness.pullback(alpha, beta)`` for ``alpha A + beta I``.
    Values below 1 are floored by the ``p = 1`` witness.
    """
    a = as_cmatrix(a)
    r = build_range(a, m)
    _, cert, nrm = _certified(a, p.coeffs, p.center, p.scale, r.outer_polygon)
    if not (np.isfinite(cert) and cert > 0) or nrm / cert < 1.0:
        return _unit_estimate(m, degree=p.degree, flags=("floor",), kind="transported")
    return RatioEstimate(nrm / cert, p, cert, nrm, m, degree=p.degree, kind="transported")


def neighborhood_polygon(u, m: int):
    """Convex polygon containing the neighbourhood ``u`` (a Disk or a vertex array)."""
    if isinstance(u, Disk):
        return pg.regular_polygon(u.center, u.radius, max(4 * m, 4096), circumscribed=True)
    poly = np.asarray(u, dtype=complex)
    if poly.ndim != 1 or poly.size < 3:
        raise InputError("polygonal neighbourhood needs at least 3 vertices")
    if pg.area(poly) < 0:
        poly = poly[::-1]
    return poly


def _strictly_inside(u, pts):
    if isinstance(u, Disk):
        return bool(np.all(u.contains(pts)))
    poly = neighborhood_polygon(u, 8)
    inside = pg.contains_point(poly, pts) & (pg.distance_to_boundary(poly, pts) > 0)
    return bool(np.all(inside))


def relative_ratio_lb(
    a,
    u,
    degree: int = 8,
    m: int = DEFAULT_GRID,
    restarts: int = 32,
    seed: int = 7,
    maxiter: int = 500,
) -> RatioEstimate:
    """Lower bound for the ratio relative to an open neighbourhood ``u`` of W(A).

    Same search as :func:`ratio_lb_poly`, normalised by a certified sup over
    (a polygon containing) ``u``. The result also bounds the plain ratio.
    """
    a = as_cmatrix(a)
    r = build_range(a, m)
    if not _strictly_inside(u, r.outer_polygon):
        raise ContainmentError("neighbourhood does not contain the outer polygon of W(A)")
    if is_normal(a):
        return _unit_estimate(m, restarts, seed, degree, flags=("normal",), kind="relative")
    boundary = neighborhood_polygon(u, m)
    center = complex(np.mean(boundary))
    scale = float(np.max(np.abs(boundary - center)))
    return _best_polynomial(a, boundary, center, scale, degree, restarts, seed, maxiter, None, m, "relative")


def best_of(*estimates: RatioEstimate) -> RatioEstimate:
    best = estimates[0]
    for e in estimates[1:]:
        if e.value > best.value:
            best = e
    return best


def regularized_ratio(a, n: int, est: RatioEstimate, known: KnownConstants = KNOWN) -> float:
    """``max(estimate, lower value of C_{N-1})``; C_0 is read as 1."""
    a = as_cmatrix(a)
    if n != a.shape[0]:
        raise InputError(f"N={n} does not match the matrix dimension {a.shape[0]}")
    prev = 1.0 if n == 1 else known.lower(n - 1)
    return max(est.value, prev)
