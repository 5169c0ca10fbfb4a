"""Matrix families used by the experiments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InputError


@dataclass(frozen=True)
class AlphaFamily:
    """``[[1, 0, 0], [0, 0, alpha], [0, 0, 0]]``; self-adjoint at alpha = 0."""

    alpha: float

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha >= 0):
            raise InputError("alpha must be a finite nonnegative real")

    @property
    def matrix(self):
        return alpha_matrix(self.alpha)


def alpha_matrix(alpha):
    a = np.zeros((3, 3), dtype=complex)
    a[0, 0] = 1.0
    a[1, 2] = alpha
    return a


def jordan2():
    return np.array([[0, 1], [0, 0]], dtype=complex)


def block_reference():
    """``[1] (+) [[0, 1], [0, 0]]``."""
    return alpha_matrix(1.0)


def random_direction(n, seed):
    """Seeded complex Gaussian matrix with unit operator norm."""
    rng = np.random.default_rng(seed)
    e = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return e / np.linalg.norm(e, 2)


def random_unitary(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def boundary_block_instance(rng, k, m):
    """``U (D (+) A_tilde) U^*`` with D's k eigenvalues on the boundary of W.

    A_tilde is an m x m complex Gaussian scaled to norm 1/2, so W(A_tilde)
    lies in the disk of radius 1/2; D's eigenvalues sit on the circle of
    radius 2 at distinct random angles. Every point of that circle is an
    extreme point of the disk of radius 2, which contains all of W(A).
    A 1 x 1 block would be normal and its eigenvalue a boundary point as
    well, so ``m`` is 0 or at least 2 (a non-normal Gaussian block keeps
    its spectrum inside its own numerical range).
    Returns ``(a, d_eigs, a_tilde, u)``.
    """
    if k < 0 or m < 0 or k + m == 0 or m == 1:
        raise InputError("need k + m >= 1 and m != 1")
    angles = np.sort(rng.uniform(0, 2 * np.pi, k))
    d = 2.0 * np.exp(1j * angles)
    if m:
        at = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
        at *= 0.5 / np.linalg.norm(at, 2)
    else:
        at = np.zeros((0, 0), dtype=complex)
    n = k + m
    blocks = np.zeros((n, n), dtype=complex)
    blocks[:k, :k] = np.diag(d)
    blocks[k:, k:] = at
    u = random_unitary(n, rng)
    return u @ blocks @ u.conj().T, d, at, u
