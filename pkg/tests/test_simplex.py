import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcenters.errors import DimensionMismatch
from eqcenters.geometry import Isometry, apply, apply_many, distance_matrix, random_isometry, rotation2d
from eqcenters.harness import isosceles_tetrahedron, random_simplex, regular_simplex
from eqcenters.simplex import (
    Simplex,
    apply_pointwise,
    congruent,
    facets,
    is_affinely_independent,
    is_equifacetal,
    same_multiset,
)


def test_simplex_vertex_count():
    with pytest.raises(DimensionMismatch):
        Simplex([(0, 0), (1, 0)])


def test_facets_drop_one(equilateral):
    A, B, C = equilateral.vertices
    fs = facets(equilateral)
    assert len(fs) == 3
    for f, expected in zip(fs, [(B, C), (A, C), (A, B)]):
        np.testing.assert_array_equal(f, np.array(expected))


def test_facets_segment():
    fs = facets(Simplex([[0.0], [1.0]]))
    np.testing.assert_array_equal(fs[0], [[1.0]])
    np.testing.assert_array_equal(fs[1], [[0.0]])


def test_facets_of_regular_tetrahedron(regular_tetrahedron):
    for f in facets(regular_tetrahedron):
        d = distance_matrix(f)[np.triu_indices(3, 1)]
        np.testing.assert_allclose(d, d[0])


def test_congruent_rotated_translated(equilateral):
    g = rotation2d(np.deg2rad(37.0), center=(0.3, -0.2))
    g = Isometry(g.linear, g.translation + np.array([5.0, 1.0]))
    T = apply_many(g, equilateral.vertices)
    c = congruent(equilateral.vertices, T)
    assert c is not None
    np.testing.assert_allclose(apply_many(c.isometry, equilateral.vertices), T[list(c.perm)], atol=1e-12)


def test_congruent_rejects_different_sides():
    S = [(0, 0), (3, 0), (0, 4)]
    # sides 3, 4, 6 via law of cosines
    cos = (9 + 16 - 36) / 24
    T = [(0, 0), (3, 0), (4 * cos, 4 * np.sqrt(1 - cos**2))]
    assert congruent(S, T) is None


def test_congruent_segments_brute_force():
    S = np.array([(0.0, 0.0), (1.0, 0.0)])
    T = np.array([(5.0, 5.0), (5.0, 6.0)])
    c = congruent(S, T)
    assert c is not None
    # oracle: try both labelings and record which ones are consistent
    ok = [p for p in itertools.permutations(range(2))
          if np.isclose(np.linalg.norm(S[0] - S[1]), np.linalg.norm(T[p[0]] - T[p[1]]))]
    assert c.perm in ok
    np.testing.assert_allclose(apply_many(c.isometry, S), T[list(c.perm)], atol=1e-12)


def test_congruent_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        congruent([(0, 0), (1, 0)], [(0, 0), (1, 0), (2, 0)])


def test_congruent_degenerate_sets_in_higher_dimension():
    # coplanar triangles in R^3 (facets of a tetrahedron) are the common case
    S = np.array([(0, 0, 0), (2, 0, 0), (0, 1, 0)], float)
    g = random_isometry(9, 3, 2.0)
    c = congruent(S, apply_many(g, S)[[2, 0, 1]])
    assert c is not None and c.isometry.is_orthogonal()


@pytest.mark.parametrize(
    "pts, expected",
    [
        ([(0, 0), (1, 0), (0, 1)], True),
        ([(0, 0), (1, 0), (2, 0)], False),
        ([(0, 0), (0, 0), (3, 0)], False),
    ],
)
def test_affine_independence(pts, expected):
    assert is_affinely_independent(pts) is expected


def test_equifacetal_equilateral(equilateral):
    assert is_equifacetal(equilateral)


def test_equifacetal_isosceles_tetrahedron(iso_tet):
    assert is_equifacetal(iso_tet)
    # oracle: the three edge lengths of every facet, from the distance matrix
    expected = sorted([2 * np.sqrt(5), 2 * np.sqrt(10), 2 * np.sqrt(13)])
    for f in facets(iso_tet):
        np.testing.assert_allclose(sorted(distance_matrix(f)[np.triu_indices(3, 1)]), expected)


def test_not_equifacetal_345(scalene):
    assert not is_equifacetal(scalene)


def test_all_coincident_is_equifacetal():
    assert is_equifacetal(Simplex([(2, 2), (2, 2), (2, 2)]))


def test_apply_pointwise_examples(equilateral):
    V = Simplex([(0, 0), (1, 0), (0, 1)])
    W = apply_pointwise(Isometry.translation_by((1, 1)), V)
    np.testing.assert_array_equal(W.vertices, [(1, 1), (2, 1), (1, 2)])
    np.testing.assert_array_equal(apply_pointwise(Isometry.identity(2), V).vertices, V.vertices)
    assert congruent(equilateral.vertices, apply_pointwise(rotation2d(np.pi / 2), equilateral).vertices)


def test_same_multiset_ignores_order():
    A = [(0, 0), (0, 0), (1, 0)]
    assert same_multiset(A, [(1, 0), (0, 0), (0, 0)])
    assert not same_multiset(A, [(1, 0), (1, 0), (0, 0)])


seeds = st.integers(0, 2**31)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 5))
def test_congruent_to_self_with_identity_admissible(seed, n):
    V = random_simplex(n, seed)
    c = congruent(V.vertices, V.vertices)
    assert c is not None
    assert c.perm == tuple(range(n + 1))


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 5))
def test_congruent_symmetric_and_under_isometry(seed, n):
    V = random_simplex(n, seed).vertices
    g = random_isometry(seed + 1, n, 3.0)
    W = apply_many(g, V)[np.random.default_rng(seed).permutation(n + 1)]
    c1 = congruent(V, W)
    c2 = congruent(W, V)
    assert c1 is not None and c2 is not None


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(2, 4))
def test_non_congruent_stays_non_congruent_both_ways(seed, n):
    V = random_simplex(n, seed).vertices
    W = random_simplex(n, seed + 1).vertices
    assert (congruent(V, W) is None) == (congruent(W, V) is None)


@pytest.mark.parametrize(
    "V",
    [regular_simplex(2), regular_simplex(3), isosceles_tetrahedron(1, 2, 3), Simplex([(0, 0), (4, 0), (0, 3)])],
    ids=["reg2", "reg3", "isotet", "345"],
)
@pytest.mark.parametrize("seed", range(5))
def test_equifacetal_invariant_under_isometry(V, seed):
    g = random_isometry(seed, V.dim, 4.0)
    assert is_equifacetal(V) == is_equifacetal(apply_pointwise(g, V))


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(2, 4))
def test_facets_commute_with_isometry(seed, n):
    V = random_simplex(n, seed)
    g = random_isometry(seed, n, 2.0)
    for f, gf in zip(facets(V), facets(apply_pointwise(g, V))):
        assert same_multiset(apply_many(g, f), gf)
