"""Simplices as ordered point lists with multiset semantics.

Coincident vertices are allowed. Vertex order is a representation detail:
no value computed here depends on it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._registration import distance_preserving_perms, register_correspondence
from .errors import DimensionMismatch
from .geometry import DEFAULT_TOL, Isometry, Tolerance, apply_many, as_points, diameter


@dataclass(frozen=True, eq=False)
class Simplex:
    """``n + 1`` points of R^n, stored as an ``(n + 1, n)`` array."""

    vertices: np.ndarray

    def __post_init__(self):
        v = as_points(self.vertices).copy()
        if v.shape[0] != v.shape[1] + 1:
            raise DimensionMismatch(
                f"a simplex in R^{v.shape[1]} needs {v.shape[1] + 1} vertices, got {v.shape[0]}"
            )
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    def __len__(self):
        return self.vertices.shape[0]

    def __iter__(self):
        return iter(self.vertices)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.vertices, dtype=dtype)

    def diameter(self) -> float:
        return diameter(self.vertices)

    def __repr__(self):
        return f"Simplex({self.vertices.tolist()})"


def as_simplex(V) -> Simplex:
    return V if isinstance(V, Simplex) else Simplex(V)


@dataclass(frozen=True)
class Correspondence:
    """Witness that ``isometry`` maps source point ``i`` onto target ``perm[i]``."""

    perm: tuple
    isometry: Isometry


def facets(V) -> list[np.ndarray]:
    """Facet ``k`` is ``V`` with vertex ``k`` removed."""
    v = as_points(V)
    return [np.delete(v, k, axis=0) for k in range(v.shape[0])]


def congruent(S, T, tol: Tolerance = DEFAULT_TOL) -> Correspondence | None:
    S = as_points(S)
    T = as_points(T)
    if S.shape != T.shape:
        raise DimensionMismatch(f"point sets have shapes {S.shape} and {T.shape}")
    # In exact arithmetic every distance-preserving bijection extends to an
    # isometry, so the first candidate normally registers; the full sweep is
    # only reached on borderline numerics.
    for limit in (1, 0):
        for perm in distance_preserving_perms(S, T, tol, limit=limit):
            g = register_correspondence(S, T, perm, tol)
            if g is not None:
                return Correspondence(tuple(int(i) for i in perm), g)
    return None


def is_affinely_independent(V, tol: Tolerance = DEFAULT_TOL) -> bool:
    v = as_points(V)
    if v.shape[0] <= 1:
        return True
    edges = v[1:] - v[0]
    smin = np.linalg.svd(edges, compute_uv=False).min() if edges.shape[0] <= edges.shape[1] else 0.0
    return bool(smin > tol.bound(diameter(v)))


def is_equifacetal(V, tol: Tolerance = DEFAULT_TOL) -> bool:
    fs = facets(V)
    return all(congruent(fs[0], f, tol) is not None for f in fs[1:])


def apply_pointwise(g: Isometry, V) -> Simplex:
    return Simplex(apply_many(g, as_simplex(V).vertices))


def same_multiset(A, B, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Equality of two point lists as multisets, at tolerance."""
    A = as_points(A)
    B = as_points(B)
    if A.shape != B.shape:
        return False
    scale = max(float(np.max(np.abs(A), initial=0.0)), float(np.max(np.abs(B), initial=0.0)))
    bound = tol.bound(scale)
    free = list(range(B.shape[0]))
    for a in A:
        d = [np.linalg.norm(a - B[j]) for j in free]
        if not d:
            return False
        k = int(np.argmin(d))
        if d[k] > bound:
            return False
        free.pop(k)
    return True
