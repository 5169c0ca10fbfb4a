"""Polygons, polynomials and the function registry."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crouzeix_ratio import polygon as pg
from crouzeix_ratio.errors import DomainError, InputError
from crouzeix_ratio.functions import (
    Affine,
    Disk,
    Mobius,
    Plane,
    PolynomialFunction,
    PuncturedPlane,
    Strip,
    TanhStrip,
    from_dict,
)
from crouzeix_ratio.polynomial import Polynomial, taylor_coefficients

from oracles import brute_sup

SQUARE = np.array([1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j])


# -- polygons -------------------------------------------------------------------------


def test_hull_of_square_with_interior_points():
    pts = np.concatenate([SQUARE, [0, 0.5j, -0.3 + 0.2j]])
    hull = pg.convex_hull(pts)
    assert set(np.round(hull, 12)) == set(np.round(SQUARE, 12))
    assert pg.area(hull) == pytest.approx(4.0)


def test_hull_is_canonical():
    rng = np.random.default_rng(0)
    pts = rng.standard_normal(50) + 1j * rng.standard_normal(50)
    assert np.array_equal(pg.convex_hull(pts), pg.convex_hull(pts[::-1]))


def test_hull_degenerate():
    assert pg.convex_hull([1, 2, 3]).size == 2
    assert pg.convex_hull([1j, 1j]).size == 1


def test_halfplane_square():
    thetas = np.pi / 2 * np.arange(4)
    poly = pg.halfplane_polygon(thetas, np.ones(4))
    assert pg.area(poly) == pytest.approx(4.0)


def test_contains_and_distance():
    z = np.array([0, 0.99, 1.01, 2j])
    assert list(pg.contains_point(SQUARE, z)) == [True, True, False, False]
    assert pg.distance_to_boundary(SQUARE, np.array([0.0]))[0] == pytest.approx(1.0)


def test_regular_polygon_contains_circle():
    poly = pg.regular_polygon(0.5, 2.0, 12)
    circle = 0.5 + 2 * np.exp(1j * np.linspace(0, 2 * np.pi, 500))
    assert np.all(pg.contains_point(poly, circle, tol=1e-12))


def test_perimeter_and_diameter():
    assert pg.perimeter(SQUARE) == pytest.approx(8.0)
    assert pg.diameter(SQUARE) == pytest.approx(2 * np.sqrt(2))


# -- certified sup --------------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 9))
def test_certified_sup_dominates_brute_force(seed, d):
    rng = np.random.default_rng(seed)
    p = Polynomial(rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1), center=0.2, scale=1.5)
    pts = rng.standard_normal(12) + 1j * rng.standard_normal(12)
    poly = pg.convex_hull(pts)
    bound, sampled = pg.certified_poly_sup(p, poly)
    brute = brute_sup(p, poly)
    assert bound >= brute * (1 - 1e-12)
    assert sampled <= brute * (1 + 1e-12) + 1e-300
    assert bound <= sampled * (1 + 1e-6) * (1 + 1e-12)


def test_certified_sup_linear_on_disk_polygon():
    poly = pg.regular_polygon(0, 0.5, 64)
    bound, _ = pg.certified_poly_sup(Polynomial([0, 2]), poly)
    assert bound == pytest.approx(1.0 / np.cos(np.pi / 64), rel=1e-6)
    assert bound >= 1.0 / np.cos(np.pi / 64)


def test_certified_sup_constant():
    assert pg.certified_poly_sup(Polynomial([3j]), SQUARE) == (3.0, 3.0)


# -- polynomial --------------------------------------------------------------------------


def test_polynomial_validation():
    with pytest.raises(InputError):
        Polynomial([])
    with pytest.raises(InputError):
        Polynomial([1, np.inf])
    with pytest.raises(InputError):
        Polynomial([1], scale=0)


def test_polynomial_trailing_zero_allowed():
    p = Polynomial([1, 2, 0])
    assert p.degree == 2
    assert p(2.0) == pytest.approx(5.0)


def test_polynomial_monomial_roundtrip():
    p = Polynomial([1, -2j, 0.5], center=1 + 1j, scale=2.0)
    q = Polynomial(p.monomial_coeffs())
    z = np.array([0.3, -1j, 2 + 2j])
    assert np.allclose(p(z), q(z))


def test_polynomial_padded():
    p = Polynomial([1, 2])
    q = p.padded(4)
    assert q.degree == 4 and np.allclose(q(1.5), p(1.5))
    with pytest.raises(InputError):
        q.padded(2)


def test_taylor_coefficients_against_binomial_expansion():
    rng = np.random.default_rng(1)
    c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    zeta = np.array([0.3 - 0.2j, 1.5])
    tay = taylor_coefficients(c, zeta)
    h = 0.37 + 0.11j
    direct = Polynomial(c)(zeta + h)
    series = sum(tay[k] * h**k for k in range(6))
    assert np.allclose(direct, series)
    assert np.allclose(tay[0], Polynomial(c)(zeta))


# -- registry ------------------------------------------------------------------------------


def test_domains():
    assert Plane().contains_polygon(SQUARE)
    assert not Disk(0, 1).contains_polygon(SQUARE)
    assert Disk(0, 1.5).contains_polygon(SQUARE)
    assert Strip(1.01).contains_polygon(SQUARE) and not Strip(1.0).contains_polygon(SQUARE)
    assert not PuncturedPlane(0.5).contains_polygon(SQUARE)
    assert PuncturedPlane(3).contains_polygon(SQUARE)


@pytest.mark.parametrize(
    "f, poly",
    [
        (Affine(2 - 1j, 0.5), SQUARE),
        (Mobius(1, 2, 1, -3), SQUARE),
        (Mobius(1j, 0, 2, 5j), pg.regular_polygon(0.3, 1.0, 9)),
        (TanhStrip(1.0), 0.7 * SQUARE),
        (TanhStrip(0.25), pg.regular_polygon(0.5, 0.2, 7)),
        (PolynomialFunction(Polynomial([1, -1, 0.5j])), SQUARE),
    ],
)
def test_sup_bound_dominates_brute_force(f, poly):
    brute = brute_sup(f, poly)
    bound = f.sup_bound(poly)
    assert bound >= brute * (1 - 1e-12)
    if not isinstance(f, TanhStrip):
        assert bound <= brute * (1 + 1e-5)


def test_tanh_bound_closed_form():
    # rectangle reaching height y0 inside the strip: sup |tanh(kappa z)| on it
    f = TanhStrip(1.0)
    y0 = 0.6
    rect = np.array([3 + y0 * 1j, -3 + y0 * 1j, -3 - y0 * 1j, 3 - y0 * 1j])
    ky = f.kappa * y0
    expect = 1.0 if ky <= np.pi / 4 else np.tan(ky)
    assert f.sup_bound(rect) == pytest.approx(expect)


@pytest.mark.parametrize("f", [Mobius(1, 2, 1, -3), TanhStrip(0.5), Affine(3, 1)])
def test_taylor_matches_function(f):
    mu = 0.1 + 0.05j
    c = f.taylor(mu, 30)
    h = 0.02 - 0.01j
    approx = sum(c[k] * h**k for k in range(30))
    assert approx == pytest.approx(complex(f(mu + h)), abs=1e-12)


def test_mobius_validation():
    with pytest.raises(InputError):
        Mobius(1, 2, 2, 4)


def test_tanh_domain():
    f = TanhStrip(0.5)
    with pytest.raises(DomainError):
        f.check_domain(np.array([0.5j]))


@pytest.mark.parametrize(
    "f", [Affine(2, 1), Mobius(1, 2, 1, -3), TanhStrip(0.25), PolynomialFunction(Polynomial([1, 2j]))]
)
def test_registry_roundtrip(f):
    g = from_dict(f.to_dict())
    z = np.array([0.1 + 0.05j, -0.2])
    assert np.allclose(f(z), g(z))


def test_registry_unknown():
    with pytest.raises(InputError):
        from_dict({"name": "sinh"})
