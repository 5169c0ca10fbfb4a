import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crouzeix_ratio.errors import ConvergenceError, DomainError, InputError, SingularityError
from crouzeix_ratio.functions import Affine, Mobius, PolynomialFunction, TanhStrip
from crouzeix_ratio.matcore import (
    as_cmatrix,
    complex_schur,
    eval_fn,
    eval_poly,
    hermitian_eigs,
    is_normal,
    op_norm,
    reorder_schur,
    resolvent,
)
from crouzeix_ratio.numrange import build_range, classify_spectrum
from crouzeix_ratio.polynomial import Polynomial

from oracles import cgauss, char_poly_roots, jacobi_svd, power_sum, random_unitary

A1 = np.array([[1, 0, 0], [0, 0, 1], [0, 0, 0]], dtype=complex)


# -- validation ------------------------------------------------------------------


@pytest.mark.parametrize(
    "bad", [np.ones((2, 3)), np.zeros((0, 0)), np.array([[np.nan, 0], [0, 1]]), np.ones((65, 65)), "x"]
)
def test_as_cmatrix_rejects(bad):
    with pytest.raises(InputError):
        as_cmatrix(bad)


# -- op_norm ------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 3, 7])
def test_op_norm_identity(n):
    assert op_norm(np.eye(n)) == pytest.approx(1.0, abs=1e-15)


def test_op_norm_rank_one():
    assert op_norm([[0, 2], [0, 0]]) == pytest.approx(2.0, rel=1e-15)


def test_op_norm_zero():
    assert op_norm(np.zeros((3, 3))) == 0.0


def test_op_norm_matches_jacobi_oracle():
    a = cgauss(np.random.default_rng(4), 4)
    assert op_norm(a) == pytest.approx(jacobi_svd(a)[0], rel=1e-9)


def test_jacobi_oracle_full_spectrum():
    # the oracle itself against a known singular spectrum
    rng = np.random.default_rng(5)
    s = np.array([5.0, 2.0, 0.5])
    a = random_unitary(3, rng) @ np.diag(s) @ random_unitary(3, rng)
    assert np.allclose(jacobi_svd(a), s, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 6))
def test_op_norm_unitary_invariance(seed, n):
    rng = np.random.default_rng(seed)
    a = cgauss(rng, n)
    u, v = random_unitary(n, rng), random_unitary(n, rng)
    assert op_norm(u @ a @ v) == pytest.approx(op_norm(a), rel=1e-9)


# -- hermitian_eigs -------------------------------------------------------------------


def test_hermitian_eigs_diagonal():
    w, v = hermitian_eigs(np.diag([3.0, 1.0, 2.0]))
    assert np.allclose(w, [3, 2, 1])


def test_hermitian_eigs_swap():
    w, _ = hermitian_eigs([[0, 1], [1, 0]])
    assert np.allclose(w, [1, -1])


def test_hermitian_part_of_a1_top_eigenvalue():
    h = 0.5 * (A1 + A1.conj().T)
    w, _ = hermitian_eigs(h)
    oracle = np.sort(char_poly_roots(h).real)[::-1]
    assert w[0] == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(w, oracle, atol=1e-10)


def test_hermitian_eigs_rejects_nonhermitian():
    with pytest.raises(InputError):
        hermitian_eigs([[0, 1], [0, 0]])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 8))
def test_hermitian_eigs_residual(seed, n):
    g = cgauss(np.random.default_rng(seed), n)
    h = g + g.conj().T
    w, v = hermitian_eigs(h)
    nh = op_norm(h)
    assert np.all(np.diff(w) <= 0)
    assert op_norm(h @ v - v * w) <= 1e-10 * nh
    assert op_norm(v.conj().T @ v - np.eye(n)) <= 1e-10


# -- Schur ----------------------------------------------------------------------------


def test_schur_diagonal_trivial_key():
    d = np.diag([1.0, 2.0, 3.0]).astype(complex)
    sf = complex_schur(d)
    assert np.allclose(sf.t, d)
    assert np.allclose(np.abs(sf.q), np.eye(3))


def test_schur_swap_matrix_key_order():
    sf = complex_schur([[0, 1], [1, 0]], order_key=lambda z: z.real)
    assert np.allclose(np.diag(sf.t), [1, -1], atol=1e-14)
    assert abs(sf.t[1, 0]) <= 1e-12


def test_schur_a1_boundary_first():
    r = build_range(A1, 256)
    marg = {round(c.eigenvalue.real, 8): c.margin for c in classify_spectrum(A1, r)}
    sf = complex_schur(A1, order_key=lambda z: -marg[round(z.real, 8)])
    assert np.allclose(np.diag(sf.t), [1, 0, 0], atol=1e-12)


def test_schur_reconstruction_sweep():
    rng = np.random.default_rng(0)
    for k in range(1000):
        n = 2 + k % 7
        a = cgauss(rng, n)
        sf = complex_schur(a, order_key=lambda z: z.real)
        na = op_norm(a)
        assert op_norm(sf.q @ sf.t @ sf.q.conj().T - a) <= 1e-10 * na
        assert op_norm(sf.q @ sf.q.conj().T - np.eye(n)) <= 1e-12 * n
        assert np.max(np.abs(np.tril(sf.t, -1))) <= 1e-12 * na
        assert np.all(np.diff(np.diag(sf.t).real) <= 1e-12)


def test_reorder_is_stable_for_ties():
    t = np.triu(cgauss(np.random.default_rng(2), 4))
    q = np.eye(4, dtype=complex)
    q2, t2, perm = reorder_schur(q, t, [0, 1, 0, 1])
    assert perm == [1, 3, 0, 2]
    assert op_norm(q2 @ t2 @ q2.conj().T - t) <= 1e-12 * op_norm(t)


def test_schur_convergence_error_carries_residual():
    err = ConvergenceError("x", 1.5)
    assert err.residual == 1.5


# -- eval_poly / eval_fn -----------------------------------------------------------------


def test_eval_poly_constant_is_identity():
    a = cgauss(np.random.default_rng(1), 3)
    assert np.allclose(eval_poly(a, Polynomial.constant(1.0)), np.eye(3))


def test_eval_poly_linear():
    out = eval_poly([[0, 1], [0, 0]], Polynomial([0, 2]))
    assert np.array_equal(out, [[0, 2], [0, 0]])


@pytest.mark.parametrize("seed", range(5))
def test_eval_poly_power_sum_oracle(seed):
    rng = np.random.default_rng(seed)
    a = cgauss(rng, 3)
    c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    ref = power_sum(a, c)
    assert op_norm(eval_poly(a, Polynomial(c)) - ref) <= 1e-10 * max(1.0, op_norm(ref))


def test_eval_poly_shifted_basis():
    a = cgauss(np.random.default_rng(3), 3)
    p = Polynomial([1, 2, 3], center=0.5 - 1j, scale=2.0)
    b = (a - (0.5 - 1j) * np.eye(3)) / 2.0
    assert np.allclose(eval_poly(a, p), power_sum(b, [1, 2, 3]))


@pytest.mark.parametrize("alpha", [1.0, 0.5, 0.25, 0.125])
def test_eval_fn_tanh_on_alpha_family(alpha):
    a = A1.copy()
    a[1, 2] = alpha
    fa = eval_fn(a, TanhStrip(alpha))
    ref = np.zeros((3, 3), dtype=complex)
    ref[0, 0] = np.tanh(np.pi / (2 * alpha))
    ref[1, 2] = np.pi / 2
    assert np.allclose(fa, ref, atol=1e-12)


def test_eval_fn_identity_map():
    a = cgauss(np.random.default_rng(6), 4)
    assert np.allclose(eval_fn(a, Affine()), a, atol=1e-12)


@pytest.mark.parametrize("seed", range(4))
def test_eval_fn_polynomial_cross_oracle(seed):
    rng = np.random.default_rng(seed)
    a = cgauss(rng, 4)
    p = Polynomial(rng.standard_normal(5) + 1j * rng.standard_normal(5))
    ref = eval_poly(a, p)
    assert op_norm(eval_fn(a, PolynomialFunction(p)) - ref) <= 1e-10 * max(1, op_norm(ref))


def test_eval_fn_clustered_eigenvalues():
    # exact double eigenvalue plus a near-double: Taylor blocks
    a = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1 + 1e-8, 1], [0, 0, 0, 3]], dtype=complex)
    p = Polynomial([0.3, -1, 0.5, 0.25, 0.1])
    assert np.allclose(eval_fn(a, PolynomialFunction(p)), eval_poly(a, p), atol=1e-9)


def test_eval_fn_block_diagonal_result():
    a = np.zeros((4, 4), dtype=complex)
    a[:2, :2] = [[1, 1], [0, 1]]
    a[2:, 2:] = [[-2, 0.5], [0, 0.5]]
    f = Mobius(1, 0, 1, 10)
    fa = eval_fn(a, f)
    assert np.allclose(fa[:2, 2:], 0, atol=1e-13) and np.allclose(fa[2:, :2], 0, atol=1e-13)


def test_eval_fn_mobius_matches_inverse():
    a = cgauss(np.random.default_rng(8), 3)
    f = Mobius(2, 1, 1, 10)
    ref = (2 * a + np.eye(3)) @ np.linalg.inv(a + 10 * np.eye(3))
    assert np.allclose(eval_fn(a, f), ref, atol=1e-10)


def test_eval_fn_domain_error():
    with pytest.raises(DomainError):
        eval_fn(np.diag([0.0, 2.0j]), TanhStrip(1.0))


def test_eval_fn_multiplicative_on_polynomials():
    rng = np.random.default_rng(9)
    a = cgauss(rng, 4)
    p = rng.standard_normal(4) + 0j
    q = rng.standard_normal(3) + 0j
    pq = Polynomial(np.convolve(p, q))
    lhs = eval_fn(a, PolynomialFunction(pq))
    rhs = eval_fn(a, PolynomialFunction(Polynomial(p))) @ eval_fn(a, PolynomialFunction(Polynomial(q)))
    assert op_norm(lhs - rhs) <= 1e-9 * max(1, op_norm(lhs))


# -- resolvent ------------------------------------------------------------------------------


def test_resolvent_identity():
    assert np.allclose(resolvent(np.eye(3), 2), np.eye(3))


def test_resolvent_diagonal():
    assert np.allclose(resolvent(np.diag([0.0, 5.0]), 1), np.diag([1, -0.25]))


def test_resolvent_on_circle():
    rng = np.random.default_rng(10)
    a = cgauss(rng, 4)
    rad = 2 * op_norm(a)
    for phi in np.linspace(0, 2 * np.pi, 13):
        z = rad * np.exp(1j * phi)
        r = resolvent(a, z)
        assert op_norm((z * np.eye(4) - a) @ r - np.eye(4)) <= 1e-9 * op_norm(r)
        assert np.allclose(r, np.linalg.solve(z * np.eye(4) - a, np.eye(4)))


def test_resolvent_identity_two_points():
    a = cgauss(np.random.default_rng(11), 4)
    z1, z2 = 3 * op_norm(a), 3j * op_norm(a)
    r1, r2 = resolvent(a, z1), resolvent(a, z2)
    assert op_norm(r1 - r2 - (z2 - z1) * r1 @ r2) <= 1e-8


def test_resolvent_singular():
    with pytest.raises(SingularityError):
        resolvent(np.diag([0.0, 1.0]), 1.0)
    with pytest.raises(SingularityError):
        resolvent(np.diag([0.0, 1.0]), 1.0 + 1e-14)


def test_is_normal():
    assert is_normal(np.diag([1, 1j, -1]))
    assert not is_normal([[0, 1], [0, 0]])
