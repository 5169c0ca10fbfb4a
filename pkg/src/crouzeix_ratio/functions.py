"""Registry of named holomorphic functions with machine-checkable domains.

Every registry function knows its Taylor coefficients about any point of
its domain (used by the Schur-Parlett evaluator) and a certified upper
bound of its modulus over a convex polygon inside the domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import polygon as pg
from .errors import DomainError, InputError
from .polynomial import Polynomial, taylor_coefficients


# -- domains -----------------------------------------------------------------


@dataclass(frozen=True)
class Plane:
    def contains(self, z):
        return np.isfinite(np.asarray(z, dtype=complex))

    def contains_polygon(self, poly):
        return bool(np.all(self.contains(poly)))

    def describe(self):
        return "C"


@dataclass(frozen=True)
class Disk:
    """Open disk."""

    center: complex
    radius: float

    def contains(self, z):
        return np.abs(np.asarray(z, dtype=complex) - self.center) < self.radius

    def contains_polygon(self, poly):
        return bool(np.all(self.contains(poly)))

    def describe(self):
        return f"|z - {self.center}| < {self.radius}"


@dataclass(frozen=True)
class Strip:
    """Open horizontal strip ``|Im z| < halfwidth``."""

    halfwidth: float

    def contains(self, z):
        return np.abs(np.asarray(z, dtype=complex).imag) < self.halfwidth

    def contains_polygon(self, poly):
        return bool(np.all(self.contains(poly)))

    def describe(self):
        return f"|Im z| < {self.halfwidth}"


@dataclass(frozen=True)
class PuncturedPlane:
    pole: complex

    def contains(self, z):
        return np.asarray(z, dtype=complex) != self.pole

    def contains_polygon(self, poly):
        return not bool(pg.contains_point(poly, np.asarray(self.pole), tol=0.0))

    def describe(self):
        return f"z != {self.pole}"


# -- functions ---------------------------------------------------------------


class AnalyticFunction:
    """Interface shared by registry members."""

    name = "analytic"
    domain = Plane()

    def __call__(self, z):
        raise NotImplementedError

    def taylor(self, mu, nterms):
        """Coefficients ``f^{(k)}(mu) / k!`` for ``k < nterms``."""
        raise NotImplementedError

    def sup_bound(self, poly):
        """Certified upper bound of ``|f|`` over a convex polygon in the domain."""
        raise NotImplementedError

    def check_domain(self, points, what="point"):
        if not np.all(self.domain.contains(points)):
            raise DomainError(f"{what} outside the domain {self.domain.describe()} of {self.name}")

    def to_dict(self):
        return {"name": self.name}


@dataclass(frozen=True)
class Affine(AnalyticFunction):
    """``f(z) = slope * z + shift``; ``Affine(1)`` is the identity map."""

    slope: complex = 1.0
    shift: complex = 0.0
    domain: object = field(default_factory=Plane)
    name = "affine"

    def __call__(self, z):
        return self.slope * np.asarray(z, dtype=complex) + self.shift

    def taylor(self, mu, nterms):
        out = np.zeros(max(nterms, 1), dtype=complex)
        out[0] = self.slope * mu + self.shift
        if nterms > 1:
            out[1] = self.slope
        return out

    def sup_bound(self, poly):
        # |affine| is convex, so its max over a polygon sits at a vertex
        return float(np.max(np.abs(self(poly))))

    def to_dict(self):
        return {"name": self.name, "slope": _c(self.slope), "shift": _c(self.shift)}


@dataclass(frozen=True)
class Mobius(AnalyticFunction):
    """``f(z) = (a z + b) / (c z + d)`` with ``ad - bc != 0``."""

    a: complex
    b: complex
    c: complex
    d: complex
    name = "mobius"

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise InputError("degenerate Mobius map (ad - bc = 0)")

    @property
    def domain(self):
        if self.c == 0:
            return Plane()
        return PuncturedPlane(-self.d / self.c)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return (self.a * z + self.b) / (self.c * z + self.d)

    def taylor(self, mu, nterms):
        out = np.zeros(max(nterms, 1), dtype=complex)
        if self.c == 0:
            out[0] = (self.a * mu + self.b) / self.d
            if nterms > 1:
                out[1] = self.a / self.d
            return out
        w = self.c * mu + self.d
        amp = (self.b * self.c - self.a * self.d) / (self.c * w)
        ratio = -self.c / w
        out[0] = (self.a * mu + self.b) / w
        k = np.arange(1, nterms)
        out[1:] = amp * ratio**k
        return out

    def sup_bound(self, poly):
        poly = np.asarray(poly, dtype=complex)
        if self.c == 0:
            return float(np.max(np.abs(self(poly))))
        best = float(np.max(np.abs(self(poly))))
        nxt = np.roll(poly, -1)
        for p0, p1 in zip(poly, nxt):
            for t in _ratio_critical_points(self, p0, p1):
                best = max(best, float(abs(self(p0 + t * (p1 - p0)))))
        return best

    def to_dict(self):
        return {"name": self.name, **{k: _c(getattr(self, k)) for k in "abcd"}}


def _ratio_critical_points(f, p0, p1):
    """Interior critical points of ``|f(p0 + t (p1 - p0))|^2`` on (0, 1).

    ``|a z + b|^2`` and ``|c z + d|^2`` are real quadratics in ``t``; the
    derivative of their ratio has a quadratic numerator.
    """
    e = p1 - p0

    def quad(alpha, beta):
        # |alpha (p0 + t e) + beta|^2 = A t^2 + B t + C
        u = alpha * e
        v = alpha * p0 + beta
        return abs(u) ** 2, 2 * (u * np.conj(v)).real, abs(v) ** 2

    a2, a1, a0 = quad(f.a, f.b)
    b2, b1, b0 = quad(f.c, f.d)
    # N'D - N D' with N = a2 t^2 + a1 t + a0 and D likewise
    coeffs = [a2 * b1 - a1 * b2, 2 * (a2 * b0 - a0 * b2), a1 * b0 - a0 * b1]
    roots = np.roots(coeffs) if np.any(np.abs(coeffs) > 0) else []
    return [r.real for r in np.atleast_1d(roots) if abs(r.imag) < 1e-12 and 0 < r.real < 1]


@dataclass(frozen=True)
class TanhStrip(AnalyticFunction):
    """``f(z) = tanh(pi z / (2 alpha))``.

    Maps the closed strip ``|Im z| <= alpha / 2`` onto the closed unit disk
    and is holomorphic on ``|Im z| < alpha``.
    """

    alpha: float
    name = "tanh_strip"

    def __post_init__(self):
        if not self.alpha > 0:
            raise InputError("tanh strip map needs alpha > 0")

    @property
    def kappa(self):
        return np.pi / (2 * self.alpha)

    @property
    def domain(self):
        return Strip(self.alpha)

    def __call__(self, z):
        return np.tanh(self.kappa * np.asarray(z, dtype=complex))

    def taylor(self, mu, nterms):
        # t' = kappa (1 - t^2), solved as a power series in h = z - mu
        n = max(nterms, 1)
        out = np.zeros(n, dtype=complex)
        out[0] = np.tanh(self.kappa * mu)
        for k in range(n - 1):
            conv = np.dot(out[: k + 1], out[k::-1])
            out[k + 1] = self.kappa * ((1.0 if k == 0 else 0.0) - conv) / (k + 1)
        return out

    def sup_bound(self, poly):
        # sup over the strip |Im w| <= y0 of |tanh w| is 1 for y0 <= pi/4 and
        # tan(y0) beyond, from |tanh|^2 = (cosh 2x - cos 2y)/(cosh 2x + cos 2y)
        y0 = self.kappa * float(np.max(np.abs(np.asarray(poly, dtype=complex).imag)))
        if y0 >= np.pi / 2:
            return float("inf")
        return 1.0 if y0 <= np.pi / 4 else float(np.tan(y0))

    def to_dict(self):
        return {"name": self.name, "alpha": self.alpha}


@dataclass(frozen=True)
class PolynomialFunction(AnalyticFunction):
    """Registry wrapper so polynomials can go through ``eval_fn`` too."""

    poly: Polynomial
    name = "polynomial"
    domain = Plane()

    def __call__(self, z):
        return self.poly(z)

    def taylor(self, mu, nterms):
        tay = taylor_coefficients(self.poly.coeffs, self.poly.local(mu))[:, 0]
        tay = tay / self.poly.scale ** np.arange(tay.size)
        out = np.zeros(max(nterms, tay.size), dtype=complex)
        out[: tay.size] = tay
        return out

    def sup_bound(self, poly):
        return pg.certified_poly_sup(self.poly, poly)[0]

    def to_dict(self):
        return {"name": self.name, **self.poly.to_dict()}


def _c(z):
    z = complex(z)
    return [z.real, z.imag]


def from_dict(d: dict) -> AnalyticFunction:
    """Rebuild a registry function from its ``to_dict`` form."""
    name = d.get("name")
    z = lambda v: complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v)
    if name == "affine":
        return Affine(z(d.get("slope", 1.0)), z(d.get("shift", 0.0)))
    if name == "mobius":
        return Mobius(*(z(d[k]) for k in "abcd"))
    if name == "tanh_strip":
        return TanhStrip(float(d["alpha"]))
    if name == "polynomial":
        coeffs = np.asarray(d["coeffs_re"]) + 1j * np.asarray(d["coeffs_im"])
        center = z(d.get("center", 0.0))
        return PolynomialFunction(Polynomial(coeffs, center, d.get("scale", 1.0)))
    raise InputError(f"unknown registry function {name!r}")
