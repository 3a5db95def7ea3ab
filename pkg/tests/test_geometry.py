import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcenters.errors import DimensionMismatch, NotOrthogonal
from eqcenters.geometry import (
    Isometry,
    Tolerance,
    apply,
    compose,
    distance_matrix,
    inverse,
    random_isometry,
    reflection,
    rotation2d,
)

rot90 = rotation2d(np.pi / 2)


def test_apply_identity():
    np.testing.assert_array_equal(apply(Isometry.identity(2), (3, 4)), [3, 4])


def test_apply_rotation():
    np.testing.assert_allclose(apply(rot90, (1, 0)), [0, 1], atol=1e-15)


def test_apply_reflection_across_y_axis():
    g = Isometry([[-1, 0], [0, 1]], [0, 0])
    np.testing.assert_array_equal(apply(g, (2, 5)), [-2, 5])
    assert reflection((1, 0)).allclose(g)


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply(rot90, (1, 2, 3))


def test_compose_identity_and_inverse():
    h = random_isometry(3, 2)
    assert compose(Isometry.identity(2), h).allclose(h)
    assert compose(h, inverse(h)).allclose(Isometry.identity(2))


def test_compose_rot90_twice():
    # oracle: the 180 degree rotation matrix written out directly
    expected = Isometry(np.array([[-1.0, 0.0], [0.0, -1.0]]), np.zeros(2))
    assert compose(rot90, rot90).allclose(expected, atol=1e-15)
    np.testing.assert_allclose(rot90.linear @ rot90.linear, expected.linear, atol=1e-15)


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(rot90, Isometry.identity(3))


def test_inverse_of_translation():
    g = Isometry.translation_by((2.0, -7.0))
    assert inverse(g).allclose(Isometry.translation_by((-2.0, 7.0)))


def test_inverse_of_rotation_about_point():
    g = rotation2d(np.pi / 2, center=(1, 1))
    gi = inverse(g)
    assert gi.allclose(rotation2d(-np.pi / 2, center=(1, 1)), atol=1e-12)
    assert compose(g, gi).allclose(Isometry.identity(2), atol=1e-12)
    np.testing.assert_allclose(apply(gi, (1, 1)), [1, 1], atol=1e-12)


def test_inverse_rejects_non_orthogonal():
    with pytest.raises(NotOrthogonal):
        inverse(Isometry([[2.0, 0.0], [0.0, 1.0]], [0.0, 0.0]))


def test_random_isometry_deterministic():
    assert random_isometry(11, 4, 3.0).allclose(random_isometry(11, 4, 3.0), atol=0)


def test_random_isometry_orthogonal_and_bounded():
    g = random_isometry(5, 5, 2.0)
    assert g.is_orthogonal()
    assert np.all(np.abs(g.translation) <= 2.0)


def test_random_isometry_determinants():
    dets = np.array([np.linalg.det(random_isometry(s, 3).linear) for s in range(1000)])
    assert np.all(np.abs(np.abs(dets) - 1.0) <= 1e-9)
    # both orientations show up
    assert (dets > 0).sum() > 400 and (dets < 0).sum() > 400


def test_distance_matrix_examples():
    np.testing.assert_array_equal(distance_matrix([(0, 0), (3, 0)]), [[0, 3], [3, 0]])
    np.testing.assert_array_equal(distance_matrix([(1, 2)]), [[0]])
    tri = [(0, 0), (1, 0), (0.5, np.sqrt(3) / 2)]
    d = distance_matrix(tri)
    np.testing.assert_allclose(d[~np.eye(3, dtype=bool)], 1.0, atol=1e-15)


def test_tolerance_rule():
    tol = Tolerance()
    assert tol.close(1.0, 1.0 + 1e-10)
    assert not tol.close(1.0, 1.0 + 1e-6)
    assert tol.close(1e6, 1e6 + 1e-4)
    with pytest.raises(ValueError):
        Tolerance(-1.0, 0.0)


seeds = st.integers(0, 2**31)
dims = st.integers(1, 5)


@settings(max_examples=200, deadline=None)
@given(seeds, dims)
def test_group_axioms(seed, n):
    rng = np.random.default_rng(seed)
    g, h, k = (random_isometry(seed + i, n, 5.0) for i in range(3))
    p = rng.normal(size=n)
    np.testing.assert_allclose(apply(Isometry.identity(n), p), p)
    np.testing.assert_allclose(apply(compose(g, h), p), apply(g, apply(h, p)), atol=1e-12)
    np.testing.assert_allclose(
        apply(compose(compose(g, h), k), p), apply(compose(g, compose(h, k)), p), atol=1e-12
    )
    np.testing.assert_allclose(apply(inverse(g), apply(g, p)), p, atol=1e-12)


@settings(max_examples=200, deadline=None)
@given(seeds, dims)
def test_distance_preserved(seed, n):
    rng = np.random.default_rng(seed)
    g = random_isometry(seed, n, 5.0)
    p, q = rng.normal(size=(2, n))
    assert np.isclose(np.linalg.norm(apply(g, p) - apply(g, q)), np.linalg.norm(p - q), rtol=1e-12)
