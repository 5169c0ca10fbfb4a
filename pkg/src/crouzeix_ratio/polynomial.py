"""Polynomials in a shifted and scaled monomial basis."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError


@dataclass(frozen=True)
class Polynomial:
    """``p(z) = sum_k coeffs[k] * ((z - center) / scale) ** k``.

    The default ``center=0, scale=1`` is the plain monomial basis. Witnesses
    produced by the optimizer live in the basis adapted to W(A), which keeps
    coefficients of moderate size.
    """

    coeffs: np.ndarray
    center: complex = 0j
    scale: float = 1.0

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=complex)).copy()
        if c.ndim != 1 or c.size == 0:
            raise InputError("polynomial needs a non-empty 1-d coefficient list")
        if not np.all(np.isfinite(c)):
            raise InputError("polynomial coefficients must be finite")
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise InputError("polynomial scale must be positive")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "scale", float(self.scale))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, value=1.0):
        return cls(np.array([value], dtype=complex))

    def local(self, z):
        return (np.asarray(z, dtype=complex) - self.center) / self.scale

    def __call__(self, z):
        zeta = self.local(z)
        out = np.full(zeta.shape, self.coeffs[-1], dtype=complex)
        for c in self.coeffs[-2::-1]:
            out = out * zeta + c
        return out

    def padded(self, degree: int) -> "Polynomial":
        """Same polynomial with zero coefficients up to ``degree``."""
        if degree < self.degree:
            raise InputError("cannot pad to a lower degree")
        c = np.zeros(degree + 1, dtype=complex)
        c[: self.coeffs.size] = self.coeffs
        return Polynomial(c, self.center, self.scale)

    def pullback(self, alpha, beta=0.0) -> "Polynomial":
        """``q(z) = p((z - beta) / alpha)``, so that ``q(alpha A + beta I) = p(A)``."""
        alpha = complex(alpha)
        if alpha == 0:
            raise InputError("pullback needs alpha != 0")
        phase = abs(alpha) / alpha
        c = self.coeffs * phase ** np.arange(self.coeffs.size)
        return Polynomial(c, beta + alpha * self.center, abs(alpha) * self.scale)

    def monomial_coeffs(self) -> np.ndarray:
        """Coefficients in the plain basis 1, z, z^2, ...

        Ill-conditioned for large ``center / scale``; meant for reporting.
        """
        out = np.zeros(1, dtype=complex)
        lin = np.array([-self.center / self.scale, 1.0 / self.scale])
        power = np.ones(1, dtype=complex)
        for c in self.coeffs:
            out = _padd(out, c * power)
            power = np.convolve(power, lin)
        return out

    def to_dict(self) -> dict:
        return {
            "coeffs_re": self.coeffs.real.tolist(),
            "coeffs_im": self.coeffs.imag.tolist(),
            "center": [self.center.real, self.center.imag],
            "scale": self.scale,
        }


def _padd(a, b):
    n = max(a.size, b.size)
    out = np.zeros(n, dtype=complex)
    out[: a.size] += a
    out[: b.size] += b
    return out


def taylor_coefficients(coeffs, zeta):
    """Taylor coefficients of ``sum_k coeffs[k] x**k`` about each point of ``zeta``.

    Returns an array of shape ``(degree + 1, len(zeta))`` whose row ``k`` is
    ``q^{(k)}(zeta) / k!``. Uses repeated synthetic division.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    zeta = np.atleast_1d(np.asarray(zeta, dtype=complex))
    d = coeffs.size - 1
    work = np.repeat(coeffs[:, None], zeta.size, axis=1)
    out = np.empty((d + 1, zeta.size), dtype=complex)
    for k in range(d + 1):
        # Horner pass on work[k:], leaving the quotient in place
        for j in range(d - 1, k - 1, -1):
            work[j] = work[j] + zeta * work[j + 1]
        out[k] = work[k]
    return out
