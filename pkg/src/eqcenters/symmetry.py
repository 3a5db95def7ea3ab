"""Stabilizers of simplices in E(n), their fixed subspaces, and registration."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from ._registration import distance_preserving_perms, register_correspondence
from .errors import AffinelyDependent, InvariantViolation
from .geometry import DEFAULT_TOL, Isometry, Tolerance, apply, apply_many, as_point
from .simplex import Simplex, as_simplex, congruent, is_affinely_independent

__all__ = [
    "AffineSubspace",
    "SymmetryGroup",
    "fixed_subspace",
    "is_vertex_transitive",
    "register",
    "register_correspondence",
    "symmetry_group",
]

NULL_RTOL = 1e-7


@dataclass(frozen=True, eq=False)
class SymmetryGroup:
    """Pairs ``(g, perm)`` with ``g(base[i]) == base[perm[i]]``.

    Construction checks the identity, closure under composition and inverses
    (on the permutation parts) and that every element maps the base onto
    itself. For an affinely independent base the permutation determines the
    isometry, so permutation closure is closure of the isometries.
    """

    elements: tuple
    base: Simplex
    tol: Tolerance = field(default=DEFAULT_TOL, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "base", as_simplex(self.base))
        object.__setattr__(self, "elements", tuple((g, tuple(int(i) for i in p)) for g, p in self.elements))
        if not self.elements:
            raise InvariantViolation("a symmetry group cannot be empty")
        v = self.base.vertices
        scale = float(np.max(np.abs(v), initial=0.0))
        for g, p in self.elements:
            res = float(np.max(np.linalg.norm(apply_many(g, v) - v[list(p)], axis=1)))
            if res > self.tol.bound(scale):
                raise InvariantViolation(f"element with perm {p} moves the base (residual {res:.3g})")
        if not kernels.perm_group_closed(self.permutations()):
            raise InvariantViolation("permutation parts are not closed under composition/inverse")

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def isometries(self) -> list[Isometry]:
        return [g for g, _ in self.elements]

    def permutations(self) -> np.ndarray:
        return np.array([p for _, p in self.elements], dtype=np.int64).reshape(len(self.elements), -1)

    def find(self, g: Isometry, atol: float = 1e-7):
        """Index of the element matching ``g``, or None."""
        for k, (h, _) in enumerate(self.elements):
            if h.allclose(g, atol=atol):
                return k
        return None


@dataclass(frozen=True, eq=False)
class AffineSubspace:
    base_point: np.ndarray
    directions: np.ndarray

    def __post_init__(self):
        b = as_point(self.base_point)
        d = np.asarray(self.directions, dtype=float).reshape(-1, b.shape[0])
        object.__setattr__(self, "base_point", b)
        object.__setattr__(self, "directions", d)

    @property
    def dim(self) -> int:
        return self.directions.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.base_point.shape[0]

    def project(self, p) -> np.ndarray:
        p = as_point(p)
        d = self.directions
        return self.base_point + d.T @ (d @ (p - self.base_point))

    def distance(self, p) -> float:
        p = as_point(p)
        return float(np.linalg.norm(p - self.project(p)))

    def contains(self, p, tol: Tolerance = DEFAULT_TOL) -> bool:
        p = as_point(p)
        return self.distance(p) <= tol.bound(float(np.linalg.norm(p)))


def symmetry_group(V, tol: Tolerance = DEFAULT_TOL) -> SymmetryGroup:
    V = as_simplex(V)
    if not is_affinely_independent(V, tol):
        raise AffinelyDependent("stabilizer of an affinely dependent simplex is infinite")
    elements = []
    for perm in distance_preserving_perms(V.vertices, V.vertices, tol):
        g = register_correspondence(V.vertices, V.vertices, perm, tol)
        if g is not None:
            elements.append((g, perm))
    return SymmetryGroup(tuple(elements), V, tol)


def fixed_subspace(H: SymmetryGroup, tol: Tolerance = DEFAULT_TOL) -> AffineSubspace:
    """Common fixed points of all elements: solve ``(Q - I) p = -t`` stacked."""
    n = H.base.dim
    a = np.vstack([g.linear - np.eye(n) for g in H.isometries()])
    b = np.concatenate([-g.translation for g in H.isometries()])
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    thr = NULL_RTOL * (s.max(initial=0.0) + 1.0)
    rank = int(np.sum(s > thr))
    base = vt[:rank].T @ ((u[:, :rank].T @ b) / s[:rank])
    F = AffineSubspace(base, vt[rank:])
    scale = float(np.max(np.abs(H.base.vertices), initial=0.0))
    for g in H.isometries():
        for p in [F.base_point, *(F.base_point + d for d in F.directions)]:
            res = float(np.linalg.norm(apply(g, p) - p))
            if res > tol.bound(1.0 + scale + float(np.linalg.norm(p))):
                raise InvariantViolation(f"fixed-subspace solve left residual {res:.3g}")
    return F


def is_vertex_transitive(H: SymmetryGroup) -> bool:
    perms = H.permutations()
    m = perms.shape[1]
    return len(set(perms[:, 0].tolist())) == m if m else True


def register(V, W, tol: Tolerance = DEFAULT_TOL) -> Isometry | None:
    """Some ``g`` with ``g . V == W`` as multisets, or None if not congruent."""
    V = as_simplex(V)
    W = as_simplex(W)
    if not is_affinely_independent(V, tol):
        raise AffinelyDependent("registration requires an affinely independent base")
    c = congruent(V.vertices, W.vertices, tol)
    return None if c is None else c.isometry
