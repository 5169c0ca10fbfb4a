import numpy as np
import pytest

from crouzeix_ratio.errors import BoundCheckError, ContourError, DegeneracyError
from crouzeix_ratio.matcore import op_norm
from crouzeix_ratio.numrange import build_range, classify_spectrum
from crouzeix_ratio.ratio import RatioEstimate, ratio_lb_poly
from crouzeix_ratio.polynomial import Polynomial
from crouzeix_ratio.structure import (
    Contour,
    boundary_split,
    induction_bound_check,
    iterated_split,
    riesz_projection,
    similarity_construction,
)

from oracles import cgauss, random_unitary

J = np.array([[0, 1], [0, 0]], dtype=complex)


def alpha(a):
    m = np.zeros((3, 3), dtype=complex)
    m[0, 0] = 1
    m[1, 2] = a
    return m


def block_diag(*blocks):
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=complex)
    i = 0
    for b in blocks:
        k = b.shape[0]
        out[i : i + k, i : i + k] = b
        i += k
    return out


def eigenprojection_2x2(a, lam):
    """Closed form: P = (A - mu I) / (lam - mu) for distinct eigenvalues lam, mu."""
    mu = np.trace(a) - lam
    return (a - mu * np.eye(2)) / (lam - mu)


# -- boundary_split -----------------------------------------------------------------------


def test_split_alpha_one():
    s = boundary_split(alpha(1.0))
    assert s.k == 1
    assert np.allclose(s.d_block, [[1]])
    assert np.allclose(np.abs(s.a_tilde), np.abs(J), atol=1e-12)
    assert s.coupling_residual <= 1e-12


def test_split_normal_all_boundary():
    a = np.diag([1, 1j, -1])
    s = boundary_split(a)
    assert s.k == 3 and s.a_tilde.shape == (0, 0)
    assert np.allclose(np.sort_complex(np.diag(s.d_block)), np.sort_complex(np.diag(a)))


def test_split_interior_only():
    s = boundary_split(J)
    assert s.k == 0
    assert op_norm(s.reconstruct() - J) <= 1e-12


def test_split_recovers_constructed_blocks():
    rng = np.random.default_rng(0)
    u = random_unitary(3, rng)
    a = u.conj().T @ block_diag(np.array([[2.0]]), J) @ u
    s = boundary_split(a)
    assert s.k == 1 and s.d_block[0, 0] == pytest.approx(2.0)
    assert s.coupling_residual <= 1e-9
    assert op_norm(s.reconstruct() - a) <= 1e-9 * op_norm(a)


def test_split_labels_match_blocks():
    s = boundary_split(alpha(0.5))
    assert all(c.on_boundary for c in s.classification[: s.k])
    assert not any(c.on_boundary for c in s.classification[s.k :])


def test_split_demotes_coupled_eigenvalue():
    # eigenvalue 1 sits on the boundary at a loose tolerance but its row couples
    a = np.array([[1, 0.3], [0, 0]], dtype=complex)
    r = build_range(a, 1024)
    labels = classify_spectrum(a, r, tol=1.0)
    assert all(c.on_boundary for c in labels)
    s = boundary_split(a, class_tol=1.0)
    assert s.retries >= 1
    assert s.coupling_residual <= 1e-8 * op_norm(a)


def test_iterated_split_normal():
    d, core, u, it = iterated_split(np.diag([1.0, 2.0, 3.0]))
    assert core.shape == (0, 0) and d.shape == (3, 3)


def test_iterated_split_two_stages():
    a = block_diag(np.array([[5.0]]), alpha(0.5))
    d, core, u, it = iterated_split(a)
    assert it == 2
    assert np.allclose(np.sort(np.diag(d).real), [1.0, 5.0])
    assert np.allclose(np.abs(core), [[0, 0.5], [0, 0]], atol=1e-10)
    assert op_norm(u @ block_diag(d, core) @ u.conj().T - a) <= 1e-9 * op_norm(a)


def test_iterated_split_jordan_untouched():
    d, core, u, it = iterated_split(J)
    assert it == 0 and np.allclose(core, J)


# -- Riesz projections ------------------------------------------------------------------------


def test_contour_validation():
    with pytest.raises(ContourError):
        Contour(0, -1)
    with pytest.raises(ContourError):
        Contour(0, 1, nodes=8)
    assert isinstance(Contour(1, 2).center, complex)


def test_riesz_isolated_eigenvalue():
    p = riesz_projection(np.diag([0.0, 5.0]), Contour(0, 1, 64))
    assert np.allclose(p, np.diag([1, 0]), atol=1e-12)


def test_riesz_all_inside():
    a = cgauss(np.random.default_rng(1), 4)
    r = 2 * op_norm(a)
    assert np.allclose(riesz_projection(a, Contour(0, r, 128)), np.eye(4), atol=1e-10)


def test_riesz_matches_eigenprojection():
    a = np.array([[0, 1], [0, 1]], dtype=complex)
    p = riesz_projection(a, Contour(1, 0.5, 64))
    assert np.allclose(p, eigenprojection_2x2(a, 1.0), atol=1e-12)
    assert op_norm(p @ a - a @ p) <= 1e-8
    assert op_norm(p @ p - p) <= 1e-8


def test_riesz_guard():
    with pytest.raises(ContourError):
        riesz_projection(np.diag([0.0, 0.99]), Contour(0, 1, 64))


def test_riesz_quadrature_converges_geometrically():
    a = np.array([[0, 1], [0, 1]], dtype=complex)
    ref = riesz_projection(a, Contour(1, 0.5, 512))
    errs = [op_norm(riesz_projection(a, Contour(1, 0.5, k)) - ref) for k in (16, 32, 64)]
    for e0, e1 in zip(errs, errs[1:]):
        assert e1 <= max(e0 / 4, 1e-12)


# -- similarity -------------------------------------------------------------------------------


U = Contour(1.0, 0.45, 64)
V = Contour(0.0, 0.45, 64)


def test_similarity_unperturbed_is_identity():
    t = alpha(1.0)
    sim = similarity_construction(t, t, U, V)
    assert np.allclose(sim.s, np.eye(3), atol=1e-12)
    assert sim.cond == pytest.approx(1.0, abs=1e-12)
    assert sim.off_block_residual <= 1e-12


def test_similarity_first_order():
    t = np.diag([0.0, 1.0]).astype(complex)
    e = cgauss(np.random.default_rng(2), 2)
    e /= op_norm(e)
    eps = 1e-3
    sim = similarity_construction(t, t + eps * e, Contour(1, 0.45), Contour(0, 0.45))
    assert op_norm(sim.s - np.eye(2)) <= 5 * eps
    assert sim.off_block_residual <= 1e-10
    assert op_norm(sim.s @ sim.s_inv - np.eye(2)) <= 1e-8


def test_similarity_projections_and_rate():
    t = alpha(1.0)
    e = cgauss(np.random.default_rng(3), 3)
    e /= op_norm(e)
    scaled = []
    for n in (10, 100, 1000):
        tn = t + e / n
        sim = similarity_construction(t, tn, U, V)
        p, q = sim.p_proj, sim.q_proj
        assert op_norm(p @ p - p) <= 1e-8 and op_norm(q @ q - q) <= 1e-8
        assert op_norm(p @ q) <= 1e-8 and op_norm(q @ p) <= 1e-8
        assert op_norm(p + q - np.eye(3)) <= 1e-8
        assert sim.off_block_residual <= 1e-8 * op_norm(tn)
        assert sim.cond >= 1
        # invariant subspace: t_n S(X) stays inside S(X), X = range of P
        x = sim.s @ sim.p_ref
        resid = (np.eye(3) - sim.p_proj) @ tn @ x
        assert op_norm(resid) <= 1e-8
        scaled.append(op_norm(sim.s - np.eye(3)) * n)
    assert max(scaled) / min(scaled) <= 1.2


def test_similarity_contour_errors():
    t = alpha(1.0)
    with pytest.raises(ContourError):
        similarity_construction(t, t, Contour(1, 0.6), Contour(0, 0.6))
    with pytest.raises(ContourError):
        similarity_construction(t, t + 0.7 * np.eye(3), U, V)


def test_similarity_degenerate():
    # T_n with both eigenvalues in U: P_n P + Q_n Q loses rank
    t = np.diag([0.0, 1.0]).astype(complex)
    tn = np.diag([1.0, 1.05]).astype(complex)
    with pytest.raises((DegeneracyError, ContourError)):
        similarity_construction(t, tn, Contour(1, 0.4), Contour(0, 0.4))


# -- bound chain ---------------------------------------------------------------------------------


def test_bound_check_unperturbed():
    t = alpha(1.0)
    est = ratio_lb_poly(t, degree=6, restarts=4)
    rep = induction_bound_check(t, t, est, 2.0, U, V)
    assert rep.cond == pytest.approx(1.0) and rep.holds
    assert est.value <= 2.0


def test_bound_check_raises():
    t = alpha(1.0)
    fake = RatioEstimate(2.3, Polynomial([1]), 1.0, 2.3, 64)
    with pytest.raises(BoundCheckError):
        induction_bound_check(t, t, fake, 2.0, U, V)


def test_bound_check_scale_invariant():
    t = alpha(1.0)
    e = cgauss(np.random.default_rng(4), 3)
    tn = t + e / op_norm(e) / 50
    est = ratio_lb_poly(tn, degree=6, restarts=4)
    rep = induction_bound_check(t, tn, est, 2.0, U, V)
    s = 3.0
    est2 = ratio_lb_poly(s * tn, degree=6, restarts=4)
    rep2 = induction_bound_check(s * t, s * tn, est2, 2.0, Contour(3, 1.35), Contour(0, 1.35))
    assert abs(rep2.psi_lb - rep.psi_lb) <= 2e-3
    assert abs(rep2.bound - rep.bound) <= 2e-3
