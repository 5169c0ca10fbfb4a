"""Transfinite-diameter estimates from discrete Fekete points.

For ``n`` points the normalised product
``d_n = (prod_{i<j} |z_i - z_j|)^{2 / (n (n - 1))}`` is maximised over a
fixed boundary sample by a Leja start followed by single-point exchanges.
``d_n`` decreases to the logarithmic capacity as ``n`` grows, slowly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import InputError

SAMPLES_PER_PIECE = 512


# -- regions -----------------------------------------------------------------


def _arc(center, radius, phi0, phi1, k):
    phi = np.linspace(phi0, phi1, k)
    return center + radius * np.exp(1j * phi)


def _segment(a, b, k):
    return a + (b - a) * np.linspace(0.0, 1.0, k)


class Region:
    name = "region"
    capacity_bounds: Tuple[float, float] = (0.0, np.inf)

    def pieces(self, k) -> List[np.ndarray]:
        raise NotImplementedError

    def boundary_samples(self, k=SAMPLES_PER_PIECE):
        if k < 2:
            raise InputError("need at least 2 samples per boundary piece")
        pts = np.concatenate(self.pieces(k))
        # drop duplicated joints, keep a canonical order
        pts = np.round(pts, 14)
        _, idx = np.unique(pts, return_index=True)
        return pts[np.sort(idx)]


class UnitCircle(Region):
    name = "unit_circle"
    capacity_bounds = (1.0, 1.0)

    def pieces(self, k):
        return [np.exp(2j * np.pi * np.arange(k) / k)]

    def membership(self, z):
        return np.abs(np.asarray(z)) <= 1.0


@dataclass(frozen=True)
class Segment(Region):
    a: complex = -2.0
    b: complex = 2.0
    name = "segment"

    @property
    def capacity_bounds(self):
        c = abs(self.b - self.a) / 4
        return (c, c)

    def pieces(self, k):
        return [_segment(complex(self.a), complex(self.b), k)]


class RegionK(Region):
    """Three closed semi-disks: the left half of the unit disk and the right
    halves of the disks of radius 1/2 centred at i/2 and -i/2.

    Equivalently, for z != 0, z is in K exactly when 1/z is not in
    ``D = {|w| < 1} u {Re w > 0, |Im w| < 1}``.
    """

    name = "K"
    # disk(-1/2, 1/2) <= K <= closed unit disk
    capacity_bounds = (0.5, 1.0)

    def membership(self, z):
        z = np.asarray(z, dtype=complex)
        left = (np.abs(z) <= 1) & (z.real <= 0)
        upper = (np.abs(z - 0.5j) <= 0.5) & (z.real >= 0)
        lower = (np.abs(z + 0.5j) <= 0.5) & (z.real >= 0)
        return left | upper | lower

    @staticmethod
    def in_d(w):
        w = np.asarray(w, dtype=complex)
        return (np.abs(w) < 1) | ((w.real > 0) & (np.abs(w.imag) < 1))

    def membership_by_inversion(self, z):
        z = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            return ~self.in_d(1.0 / z)

    def distance_to_boundary(self, z):
        """Distance to the union of the five boundary pieces (arcs and axis segments)."""
        z = np.asarray(z, dtype=complex)

        def arc_dist(center, radius, lo, hi):
            w = z - center
            ang = np.angle(w)
            inside = (ang >= lo) & (ang <= hi)
            d_circle = np.abs(np.abs(w) - radius)
            ends = np.minimum(np.abs(w - radius * np.exp(1j * lo)), np.abs(w - radius * np.exp(1j * hi)))
            return np.where(inside, d_circle, ends)

        def seg_dist(a, b):
            ab = b - a
            t = np.clip(((z - a) * np.conj(ab)).real / abs(ab) ** 2, 0, 1)
            return np.abs(z - (a + t * ab))

        d = np.minimum.reduce([
            arc_dist(0, 1.0, np.pi / 2, np.pi) ,
            arc_dist(0, 1.0, -np.pi, -np.pi / 2),
            arc_dist(0.5j, 0.5, -np.pi / 2, np.pi / 2),
            arc_dist(-0.5j, 0.5, -np.pi / 2, np.pi / 2),
            seg_dist(0, 1j),
            seg_dist(0, -1j),
        ])
        return d

    def pieces(self, k):
        return [
            _arc(0, 1.0, np.pi / 2, 3 * np.pi / 2, k),
            _arc(0.5j, 0.5, -np.pi / 2, np.pi / 2, k),
            _arc(-0.5j, 0.5, -np.pi / 2, np.pi / 2, k),
            _segment(0, 1j, k),
            _segment(0, -1j, k),
        ]


# -- Fekete points -------------------------------------------------------------


def _log_dist(a, b):
    with np.errstate(divide="ignore"):
        return np.log(np.abs(a[:, None] - b[None, :]))


def log_diameter(points):
    """``log d_n`` for a point configuration."""
    pts = np.asarray(points, dtype=complex)
    n = pts.size
    ld = _log_dist(pts, pts)
    iu = np.triu_indices(n, 1)
    return 2.0 * float(np.sum(ld[iu])) / (n * (n - 1))


def leja_points(samples, n):
    """Greedy Leja sequence on a finite sample, starting at the largest modulus."""
    samples = np.asarray(samples, dtype=complex)
    if n > samples.size:
        raise InputError("more Leja points requested than boundary samples")
    idx = [int(np.argmax(np.abs(samples)))]
    with np.errstate(divide="ignore"):
        score = np.log(np.abs(samples - samples[idx[0]]))
    for _ in range(n - 1):
        score_masked = score.copy()
        score_masked[idx] = -np.inf
        j = int(np.argmax(score_masked))
        idx.append(j)
        with np.errstate(divide="ignore"):
            score = score + np.log(np.abs(samples - samples[j]))
    return idx


def fekete_exchange(samples, idx, max_swaps):
    """Single-point exchanges until no swap increases the product.

    Returns the improved index list and the number of swaps performed.
    """
    samples = np.asarray(samples, dtype=complex)
    idx = list(idx)
    n = len(idx)
    with np.errstate(divide="ignore"):
        # ld_all[s, i] = log|s - z_i|; -inf where s is a current point
        ld_all = np.log(np.abs(samples[:, None] - samples[None, idx]))
    swaps = 0
    improved = True
    while improved and swaps < max_swaps:
        improved = False
        for i in range(n):
            # score of moving point i to each candidate
            score = np.delete(ld_all, i, axis=1).sum(axis=1)
            cur = score[idx[i]]
            score[idx] = -np.inf
            j = int(np.argmax(score))
            if score[j] > cur + 1e-12 * max(1.0, abs(cur)):
                with np.errstate(divide="ignore"):
                    ld_all[:, i] = np.log(np.abs(samples - samples[j]))
                idx[i] = j
                swaps += 1
                improved = True
                if swaps >= max_swaps:
                    break
    return idx, swaps


def _greedy_removal(samples, idx, n_target):
    """Drop points one at a time, each time the one whose removal maximises the product."""
    idx = list(idx)
    while len(idx) > n_target:
        pts = samples[idx]
        ld = _log_dist(pts, pts)
        np.fill_diagonal(ld, 0.0)
        k = int(np.argmin(ld.sum(axis=1)))
        idx.pop(k)
    return idx


@dataclass(frozen=True)
class CapacityEstimate:
    region: str
    n_points: int
    fekete_pts: np.ndarray
    d_n: float
    history: List[Tuple[int, float]]
    capacity_bounds: Tuple[float, float]
    swaps: List[int] = field(default_factory=list)

    def monotone(self, slack=1e-10):
        vals = [d for _, d in self.history]
        return all(b <= a + slack for a, b in zip(vals, vals[1:]))

    def to_dict(self):
        return {
            "region": self.region,
            "n_points": self.n_points,
            "d_n": self.d_n,
            "history": [[n, d] for n, d in self.history],
            "capacity_bounds": list(self.capacity_bounds),
            "swaps": list(self.swaps),
            "fekete_re": self.fekete_pts.real.tolist(),
            "fekete_im": self.fekete_pts.imag.tolist(),
        }


def fekete_capacity(
    region: Region,
    n_list: Sequence[int] = (8, 16, 32, 64),
    samples_per_piece: int = SAMPLES_PER_PIECE,
    swap_factor: int = 200,
) -> CapacityEstimate:
    """Fekete-point estimates ``d_n`` for each ``n`` in ``n_list``.

    The history is made nonincreasing by construction: each smaller
    configuration also competes against greedy point removal from the next
    larger one, which by an averaging argument never lowers ``d``.
    Deterministic (Leja start, ordered sweeps).
    """
    n_list = [int(n) for n in n_list]
    if any(n < 3 for n in n_list) or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise InputError("n_list must be increasing with entries >= 3")
    samples = region.boundary_samples(samples_per_piece)
    if samples.size < n_list[-1]:
        raise InputError("boundary sample too small for the requested point counts")
    configs = {}
    swaps = {}
    for n in n_list:
        idx, s = fekete_exchange(samples, leja_points(samples, n), swap_factor * n)
        configs[n] = idx
        swaps[n] = s
    for small, large in zip(n_list[-2::-1], n_list[:0:-1]):
        derived = _greedy_removal(samples, configs[large], small)
        derived, s = fekete_exchange(samples, derived, swap_factor * small)
        swaps[small] += s
        if log_diameter(samples[derived]) > log_diameter(samples[configs[small]]):
            configs[small] = derived
    history = [(n, float(np.exp(log_diameter(samples[configs[n]])))) for n in n_list]
    last = n_list[-1]
    return CapacityEstimate(
        region.name,
        last,
        samples[configs[last]],
        history[-1][1],
        history,
        tuple(region.capacity_bounds),
        [swaps[n] for n in n_list],
    )
