import numpy as np
import pytest

from spherepairs.errors import InvalidInput, PointsNotInGeneralPosition
from spherepairs.minkowski import scalar_product, spans_equal
from spherepairs.spheres import (
    POINT_AT_INFINITY,
    EuclideanPlane,
    EuclideanSphere,
    ExtendedPoint,
    contains,
    euclidean_data,
    hypersphere_from_center_radius,
    hypersphere_from_plane,
    hypersphere_unit_normal,
    lift,
    sphere_from_points,
    stereographic,
)


def sample_on_sphere(center, radius, rng, count):
    """Uniform-ish points on the euclidean hypersphere |y - center| = radius."""
    n = len(center)
    dirs = rng.normal(size=(count, n))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    return np.asarray(center) + radius * dirs


# --- lift / stereographic ---------------------------------------------------


def test_lift_origin_and_infinity():
    np.testing.assert_allclose(lift(ExtendedPoint.finite([0.0, 0.0])), [0, 0, -1, 1])
    np.testing.assert_allclose(lift(POINT_AT_INFINITY, 2), [0, 0, 1, 1])
    with pytest.raises(InvalidInput):
        lift(POINT_AT_INFINITY)


def test_lift_is_isotropic():
    rng = np.random.default_rng(3)
    for _ in range(200):
        y = rng.normal(scale=rng.uniform(0.1, 10.0), size=rng.integers(1, 6))
        x = lift(ExtendedPoint.finite(y))
        assert abs(scalar_product(x, x)) < 1e-12


def test_stereographic_poles():
    assert stereographic(np.array([0.0, 0.0, -1.0, 1.0])) == ExtendedPoint.finite([0.0, 0.0])
    assert stereographic(np.array([0.0, 0.0, 1.0, 1.0])).is_infinity
    with pytest.raises(InvalidInput):
        stereographic(np.array([1.0, 0.0, 0.0, 0.0]))  # not isotropic


def test_stereographic_round_trip():
    rng = np.random.default_rng(5)
    for _ in range(300):
        n = int(rng.integers(1, 6))
        y = rng.normal(scale=rng.uniform(0.05, 3.0), size=n)
        back = stereographic(lift(ExtendedPoint.finite(y)))
        np.testing.assert_allclose(back.array(), y, atol=1e-12)


def test_stereographic_round_trip_large_points_relative():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 6))
        y = rng.normal(size=n)
        y *= rng.uniform(10.0, 1e3) / np.linalg.norm(y)
        back = stereographic(lift(ExtendedPoint.finite(y)))
        err = np.linalg.norm(back.array() - y)
        assert err < 1e-10 * np.linalg.norm(y)


def test_lift_of_stereographic_is_proportional():
    rng = np.random.default_rng(9)
    for _ in range(100):
        y = rng.normal(size=3) * rng.uniform(0.1, 5.0)
        x = lift(ExtendedPoint.finite(y)) * rng.uniform(0.5, 2.0) * rng.choice([-1.0, 1.0])
        x2 = lift(stereographic(x))
        cross = np.outer(x, x2) - np.outer(x2, x)
        assert np.max(np.abs(cross)) < 1e-10 * np.linalg.norm(x) * np.linalg.norm(x2)


# --- hypersphere constructors ----------------------------------------------


def test_unit_sphere_normal_vector():
    s = hypersphere_from_center_radius([0.0, 0.0], 1.0)
    vec = hypersphere_unit_normal(s)
    # the representative is sign-fixed; the line is spanned by (0,0,1,0)
    np.testing.assert_allclose(vec, [0.0, 0.0, 1.0, 0.0], atol=1e-12)


def test_center_radius_normal_is_unit_and_contains_sphere_points():
    rng = np.random.default_rng(11)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        z = rng.normal(size=n) * 3.0
        r = rng.uniform(0.1, 5.0)
        s = hypersphere_from_center_radius(z, r)
        vec = hypersphere_unit_normal(s)
        assert abs(scalar_product(vec, vec) - 1.0) < 1e-12
        for y in sample_on_sphere(z, r, rng, 20):
            x = lift(ExtendedPoint.finite(y))
            assert abs(scalar_product(x, vec)) < 1e-10
            assert contains(s, ExtendedPoint.finite(y))


def test_center_radius_rejects_bad_radius():
    with pytest.raises(InvalidInput):
        hypersphere_from_center_radius([0.0, 0.0], -1.0)
    with pytest.raises(InvalidInput):
        hypersphere_from_center_radius([0.0, 0.0], 0.0)


def test_plane_constructor_basics():
    s = hypersphere_from_plane([1.0, 0.0], 0.0)
    np.testing.assert_allclose(hypersphere_unit_normal(s), [1.0, 0.0, 0.0, 0.0], atol=1e-12)
    assert contains(s, POINT_AT_INFINITY)
    with pytest.raises(InvalidInput):
        hypersphere_from_plane([0.0, 0.0], 1.0)


def test_plane_normals_scalar_product():
    rng = np.random.default_rng(13)
    for _ in range(50):
        n = int(rng.integers(2, 6))
        b1 = rng.normal(size=n)
        b1 /= np.linalg.norm(b1)
        b2 = rng.normal(size=n)
        b2 /= np.linalg.norm(b2)
        p1, p2 = rng.normal(size=2)
        v1 = hypersphere_unit_normal(hypersphere_from_plane(b1, p1))
        v2 = hypersphere_unit_normal(hypersphere_from_plane(b2, p2))
        assert abs(abs(scalar_product(v1, v2)) - abs(float(b1 @ b2))) < 1e-10


def test_plane_contains_its_solutions():
    rng = np.random.default_rng(17)
    for _ in range(50):
        n = int(rng.integers(2, 5))
        b = rng.normal(size=n)
        p = rng.normal()
        s = hypersphere_from_plane(b, p)
        # random solutions of <b, y> = p
        y0 = p * b / float(b @ b)
        tangent = rng.normal(size=n)
        tangent -= b * float(b @ tangent) / float(b @ b)
        y = y0 + tangent
        assert abs(float(b @ y) - p) < 1e-9
        assert contains(s, ExtendedPoint.finite(y))


# --- sphere through points --------------------------------------------------


def test_circle_through_three_points_matches_center_radius():
    pts = [ExtendedPoint.finite(p) for p in ([1.0, 0.0], [-1.0, 0.0], [0.0, 1.0])]
    s = sphere_from_points(pts, 1)
    ref = hypersphere_from_center_radius([0.0, 0.0], 1.0)
    assert spans_equal(s.subspace, ref.subspace)


def test_point_pair_is_a_zero_sphere():
    s = sphere_from_points([ExtendedPoint.finite([0.0, 0.0]), ExtendedPoint.finite([1.0, 0.0])], 0)
    assert s.m == 0
    assert contains(s, ExtendedPoint.finite([0.0, 0.0]))
    assert contains(s, ExtendedPoint.finite([1.0, 0.0]))


def test_collinear_points_give_the_line_through_infinity():
    pts = [ExtendedPoint.finite([float(k), 0.0]) for k in range(3)]
    s = sphere_from_points(pts, 1)
    ref = hypersphere_from_plane([0.0, 1.0], 0.0)
    assert spans_equal(s.subspace, ref.subspace)
    assert contains(s, POINT_AT_INFINITY)


def test_sphere_from_points_agrees_with_center_radius_construction():
    rng = np.random.default_rng(19)
    for _ in range(30):
        n = int(rng.integers(2, 5))
        z = rng.normal(size=n) * 2.0
        r = rng.uniform(0.2, 3.0)
        pts = [ExtendedPoint.finite(y) for y in sample_on_sphere(z, r, rng, n + 1)]
        try:
            s = sphere_from_points(pts, n - 1)
        except PointsNotInGeneralPosition:
            continue
        ref = hypersphere_from_center_radius(z, r)
        assert spans_equal(s.subspace, ref.subspace, tol=1e-7)


def test_sphere_from_points_rejects_degenerate_input():
    pts = [ExtendedPoint.finite(p) for p in ([0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0])]
    with pytest.raises(PointsNotInGeneralPosition):
        sphere_from_points(pts, 2)  # collinear points span no 2-sphere
    with pytest.raises(InvalidInput):
        sphere_from_points(pts, 1)  # wrong point count


def test_constructed_spheres_have_index_one():
    rng = np.random.default_rng(23)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        m = int(rng.integers(0, n + 1))
        pts = [ExtendedPoint.finite(rng.normal(size=n) * 2.0) for _ in range(m + 2)]
        try:
            s = sphere_from_points(pts, m)
        except PointsNotInGeneralPosition:
            continue
        assert s.subspace.inertia == (m + 1, 1, 0)


# --- euclidean data recovery -------------------------------------------------


def test_euclidean_data_of_unit_sphere():
    data = euclidean_data(hypersphere_from_center_radius([0.0, 0.0, 0.0], 1.0))
    assert isinstance(data, EuclideanSphere)
    np.testing.assert_allclose(data.center, np.zeros(3), atol=1e-12)
    assert data.radius == pytest.approx(1.0, abs=1e-12)


def test_euclidean_data_of_plane():
    data = euclidean_data(hypersphere_from_plane([1.0, 0.0], 0.0))
    assert isinstance(data, EuclideanPlane)
    np.testing.assert_allclose(data.normal, [1.0, 0.0], atol=1e-12)
    assert data.offset == pytest.approx(0.0, abs=1e-12)


def test_euclidean_data_round_trip():
    rng = np.random.default_rng(29)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        z = rng.normal(size=n) * 4.0
        r = rng.uniform(0.05, 8.0)
        data = euclidean_data(hypersphere_from_center_radius(z, r))
        assert isinstance(data, EuclideanSphere)
        np.testing.assert_allclose(data.center, z, atol=1e-10 * max(1.0, np.linalg.norm(z)))
        assert data.radius == pytest.approx(r, abs=1e-10 * max(1.0, r))


def test_plane_data_round_trip():
    rng = np.random.default_rng(31)
    for _ in range(50):
        n = int(rng.integers(2, 6))
        b = rng.normal(size=n)
        b /= np.linalg.norm(b)
        p = rng.normal() * 2.0
        data = euclidean_data(hypersphere_from_plane(b, p))
        assert isinstance(data, EuclideanPlane)
        # unoriented plane: (b, p) and (-b, -p) describe the same set
        sgn = 1.0 if float(data.normal @ b) > 0 else -1.0
        np.testing.assert_allclose(sgn * data.normal, b, atol=1e-10)
        assert sgn * data.offset == pytest.approx(p, abs=1e-10)


# --- containment -------------------------------------------------------------


def test_contains_on_unit_circle():
    s = hypersphere_from_center_radius([0.0, 0.0], 1.0)
    assert contains(s, ExtendedPoint.finite([1.0, 0.0]))
    assert not contains(s, ExtendedPoint.finite([2.0, 0.0]))
    assert not contains(s, POINT_AT_INFINITY)


def test_contains_is_scale_invariant_in_the_lift():
    from spherepairs.minkowski import member

    s = hypersphere_from_center_radius([0.5, -0.25], 1.5)
    y = ExtendedPoint.finite([0.5 + 1.5, -0.25])
    x = lift(y, 2)
    rng = np.random.default_rng(37)
    for _ in range(10):
        assert member(float(rng.uniform(0.01, 100.0)) * x, s.subspace)
