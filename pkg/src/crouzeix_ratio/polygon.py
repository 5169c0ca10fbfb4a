"""Convex polygon helpers on complex coordinates.

Polygons are 1-d complex arrays of vertices in counter-clockwise order,
without repeating the first vertex.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial import ConvexHull
from scipy.spatial import QhullError

from .polynomial import Polynomial, taylor_coefficients


def cross(a, b):
    return a.real * b.imag - a.imag * b.real


def convex_hull(points, tol=1e-13):
    """Counter-clockwise hull vertices of a point cloud.

    Collinear or coincident input returns the two extreme points (or one),
    which callers treat as a degenerate polygon.
    """
    pts = np.unique(np.round(np.asarray(points, dtype=complex).ravel(), 15))
    # np.unique sorts complex lexicographically, giving a canonical order
    if pts.size <= 2:
        return pts
    scale = max(np.max(np.abs(pts - pts.mean())), 1e-300)
    try:
        hull = ConvexHull(np.column_stack([pts.real, pts.imag]))
    except QhullError:
        return _segment_hull(pts)
    if hull.volume <= tol * scale**2:
        return _segment_hull(pts)
    verts = pts[hull.vertices]
    start = np.lexsort((verts.imag, verts.real))[0]
    return np.roll(verts, -start)


def _segment_hull(pts):
    c = pts.mean()
    d = pts - c
    k = np.argmax(np.abs(d))
    direction = d[k] / abs(d[k])
    t = (d * np.conj(direction)).real
    lo, hi = pts[np.argmin(t)], pts[np.argmax(t)]
    if lo == hi:
        return np.array([lo])
    return np.array([lo, hi])


def halfplane_polygon(thetas, support):
    """Vertices of ``{z : Re(exp(-i theta_k) z) <= support_k for all k}``.

    ``thetas`` must be increasing and cover the circle with gaps below pi.
    Each halfplane is a supporting line of one convex set, so every line
    contributes an edge and the vertices are consecutive intersections.
    """
    t0 = np.asarray(thetas, dtype=float)
    h0 = np.asarray(support, dtype=float)
    t1 = np.roll(t0, -1)
    h1 = np.roll(h0, -1)
    det = np.sin(t1 - t0)
    x = (h0 * np.sin(t1) - h1 * np.sin(t0)) / det
    y = (h1 * np.cos(t0) - h0 * np.cos(t1)) / det
    return x + 1j * y


def contains_point(poly, z, tol=0.0):
    """True where ``z`` lies in the closed convex polygon (inflated by ``tol``)."""
    z = np.asarray(z, dtype=complex)
    poly = np.asarray(poly, dtype=complex)
    if poly.size == 1:
        return np.abs(z - poly[0]) <= tol
    if poly.size == 2:
        return segment_distance(poly[0], poly[1], z) <= tol
    edges = np.roll(poly, -1) - poly
    lengths = np.abs(edges)
    # signed distance to each edge line, positive inside
    # (near-zero edges, where adjacent halfplanes meet at one corner, have no
    # reliable direction and are skipped)
    rel = z[..., None] - poly
    keep = lengths > 1e-12 * lengths.max()
    dist = cross(edges[keep], rel[..., keep]) / lengths[keep]
    return np.all(dist >= -tol, axis=-1)


def segment_distance(a, b, z):
    z = np.asarray(z, dtype=complex)
    ab = b - a
    t = np.clip(((z - a) * np.conj(ab)).real / abs(ab) ** 2, 0.0, 1.0)
    return np.abs(z - (a + t * ab))


def distance_to_boundary(poly, z):
    """Unsigned distance from ``z`` to the polygon boundary."""
    z = np.asarray(z, dtype=complex)
    nxt = np.roll(poly, -1)
    d = np.stack([segment_distance(a, b, z) for a, b in zip(poly, nxt)])
    return d.min(axis=0)


def area(poly):
    poly = np.asarray(poly, dtype=complex)
    if poly.size < 3:
        return 0.0
    return 0.5 * float(np.sum(cross(poly, np.roll(poly, -1))))


def perimeter(poly):
    return float(np.sum(np.abs(np.roll(poly, -1) - poly)))


def diameter(poly):
    poly = np.asarray(poly, dtype=complex)
    return float(np.max(np.abs(poly[:, None] - poly[None, :]))) if poly.size > 1 else 0.0


def regular_polygon(center, radius, m, circumscribed=True):
    """Regular m-gon around a circle; circumscribed ones contain the disk."""
    phi = 2 * np.pi * np.arange(m) / m
    r = radius / np.cos(np.pi / m) if circumscribed else radius
    return center + r * np.exp(1j * (phi + np.pi / m))


def subdivide(poly, per_edge):
    """Midpoints, unit directions and half-lengths of equal sub-segments."""
    poly = np.asarray(poly, dtype=complex)
    edges = np.roll(poly, -1) - poly
    k = np.broadcast_to(np.asarray(per_edge, dtype=int), poly.shape)
    idx = np.repeat(np.arange(poly.size), k)
    offs = np.concatenate([(np.arange(kk) + 0.5) / kk for kk in k])
    mids = poly[idx] + offs * edges[idx]
    lengths = np.abs(edges[idx])
    safe = np.where(lengths > 0, lengths, 1.0)
    units = np.where(lengths > 0, edges[idx] / safe, 1.0)
    return mids, units, lengths / (2 * k[idx])


def certified_poly_sup(p: Polynomial, poly, rel_tol=1e-6, max_samples=1 << 20):
    """Upper bound on ``max |p|`` over a convex polygon, plus the sampled maximum.

    By the maximum principle the supremum sits on the boundary. Each edge is
    cut into sub-segments; on a sub-segment with midpoint ``s``, direction
    ``u`` and half-length ``rho`` the exact Taylor expansion of ``p`` gives

        |p(s + t u)| <= max(|p(s) + rho u p'(s)|, |p(s) - rho u p'(s)|)
                        + sum_{k>=2} |p^(k)(s)/k!| rho^k

    for |t| <= rho. Sub-segments are refined until the bound exceeds the
    sampled maximum by at most ``rel_tol`` relatively, or the sample budget
    is spent (the bound stays valid either way).
    """
    poly = np.asarray(poly, dtype=complex)
    if poly.size == 1:
        v = float(np.abs(p(poly))[0])
        return v, v
    if p.degree == 0:
        v = float(abs(p.coeffs[0]))
        return v, v
    lengths = np.abs(np.roll(poly, -1) - poly)
    per = perimeter(poly)
    target = max(4 * poly.size, 256)
    while True:
        h = per / target
        k = np.maximum(1, np.ceil(lengths / h)).astype(int)
        mids, units, rho = subdivide(poly, k)
        tay = taylor_coefficients(p.coeffs, p.local(mids))
        rho_loc = rho / p.scale
        lin = units / p.scale * tay[1] * rho
        head = np.maximum(np.abs(tay[0] + lin), np.abs(tay[0] - lin))
        powers = rho_loc[None, :] ** np.arange(2, p.degree + 1)[:, None]
        tail = np.sum(np.abs(tay[2:]) * powers, axis=0)
        bound = float(np.max(head + tail))
        sampled = float(max(np.max(np.abs(tay[0])), np.max(np.abs(p(poly)))))
        if bound <= sampled * (1 + rel_tol) or k.sum() * 2 > max_samples:
            return bound, sampled
        target *= 2
