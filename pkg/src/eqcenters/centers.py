"""Center functions: maps from simplices to points that commute with E(n).

Every center here is a partial map with an explicit domain. ``Centroid`` and
``HWeighted`` are total; ``OrbitTransport`` lives on the orbit of its base
simplex; ``TriangleClassical`` needs a triangle in the plane, and its
circumcenter and orthocenter also need non-collinear vertices. Off-domain
evaluation raises ``OutOfDomain`` or a subclass.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AnchorNotFixed, Collinear, DimensionMismatch, NoAffineCenter, OutOfDomain
from .geometry import DEFAULT_TOL, Isometry, Tolerance, apply, as_point
from .simplex import Simplex, apply_pointwise, as_simplex, congruent, is_affinely_independent
from .symmetry import SymmetryGroup, symmetry_group

TRIANGLE_KINDS = ("incenter", "orthocenter", "circumcenter")


def centroid(V) -> np.ndarray:
    return as_simplex(V).vertices.mean(axis=0)


def h_distances(V) -> np.ndarray:
    """Distance from each vertex to the centroid of the remaining ones."""
    v = as_simplex(V).vertices
    m = v.shape[0]
    others = (v.sum(axis=0) - v) / (m - 1)
    return np.linalg.norm(v - others, axis=1)


def h_weighted_center(V) -> np.ndarray:
    v = as_simplex(V).vertices
    if np.all(v == v[0]):
        return centroid(V)
    h = h_distances(V)
    return (h / h.sum()) @ v


@dataclass(frozen=True)
class Centroid:
    name = "centroid"

    def evaluate(self, W, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
        return centroid(W)


@dataclass(frozen=True)
class HWeighted:
    name = "h_weighted"

    def evaluate(self, W, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
        return h_weighted_center(W)


@dataclass(frozen=True, eq=False)
class OrbitTransport:
    """Center defined on the orbit of ``base`` by ``g . base -> g . anchor``.

    Well defined because ``anchor`` is fixed by every symmetry of ``base``;
    that is checked on construction.
    """

    base: Simplex
    anchor: np.ndarray
    tol: Tolerance = field(default=DEFAULT_TOL, repr=False)
    group: SymmetryGroup = field(init=False, repr=False)

    name = "orbit_transport"

    def __post_init__(self):
        base = as_simplex(self.base)
        anchor = as_point(self.anchor)
        if anchor.shape[0] != base.dim:
            raise DimensionMismatch(f"anchor in R^{anchor.shape[0]}, base in R^{base.dim}")
        group = symmetry_group(base, self.tol)
        scale = max(float(np.max(np.abs(base.vertices))), float(np.max(np.abs(anchor), initial=0.0)))
        for g, perm in group.elements:
            res = float(np.linalg.norm(apply(g, anchor) - anchor))
            if res > self.tol.bound(scale):
                raise AnchorNotFixed(
                    f"anchor {anchor.tolist()} is moved by the symmetry with vertex "
                    f"permutation {list(perm)} (residual {res:.3g})",
                    element=(g, perm),
                    residual=res,
                )
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "group", group)

    def transport(self, W, tol: Tolerance | None = None) -> Isometry:
        W = as_simplex(W)
        if W.dim != self.base.dim:
            raise DimensionMismatch(f"center lives in R^{self.base.dim}, simplex in R^{W.dim}")
        # base independence was established on construction; skip register()'s recheck
        c = congruent(self.base.vertices, W.vertices, tol or self.tol)
        if c is None:
            raise OutOfDomain("simplex is not congruent to the base of this orbit-transport center")
        return c.isometry

    def evaluate(self, W, tol: Tolerance | None = None) -> np.ndarray:
        return apply(self.transport(W, tol), self.anchor)


@dataclass(frozen=True)
class TriangleClassical:
    kind: str

    def __post_init__(self):
        if self.kind not in TRIANGLE_KINDS:
            raise ValueError(f"unknown triangle center {self.kind!r}")

    @property
    def name(self) -> str:
        return self.kind

    def evaluate(self, W, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
        return triangle_center(self.kind, W, tol)


def _triangle(W) -> np.ndarray:
    v = as_simplex(W).vertices
    if v.shape != (3, 2):
        raise OutOfDomain(f"triangle centers need a triangle in the plane, got shape {v.shape}")
    return v


def triangle_center(kind: str, W, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    A, B, C = _triangle(W)
    if kind == "incenter":
        a = np.linalg.norm(B - C)
        b = np.linalg.norm(C - A)
        c = np.linalg.norm(A - B)
        if a + b + c == 0.0:
            raise Collinear("all three vertices coincide")
        return (a * A + b * B + c * C) / (a + b + c)
    if not is_affinely_independent(np.array([A, B, C]), tol):
        raise Collinear(f"{kind} is undefined: the three vertices are collinear")
    if kind == "circumcenter":
        # perpendicular bisectors of AB and AC
        m = 2.0 * np.array([B - A, C - A])
        rhs = np.array([B @ B - A @ A, C @ C - A @ A])
        return np.linalg.solve(m, rhs)
    if kind == "orthocenter":
        # altitudes through A and B
        m = np.array([C - B, C - A])
        rhs = np.array([A @ (C - B), B @ (C - A)])
        return np.linalg.solve(m, rhs)
    raise ValueError(f"unknown triangle center {kind!r}")


incenter = TriangleClassical("incenter")
orthocenter = TriangleClassical("orthocenter")
circumcenter = TriangleClassical("circumcenter")


def make_orbit_center(base, anchor, tol: Tolerance = DEFAULT_TOL) -> OrbitTransport:
    return OrbitTransport(as_simplex(base), anchor, tol)


def evaluate(Z, W, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    return Z.evaluate(as_simplex(W), tol)


def check_equivariance(Z, V, g: Isometry, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``Z(g . V) == g . Z(V)`` within ``tol.abs * (1 + diam V)``."""
    V = as_simplex(V)
    lhs = evaluate(Z, apply_pointwise(g, V), tol)
    rhs = apply(g, evaluate(Z, V, tol))
    return bool(np.linalg.norm(lhs - rhs) <= tol.abs * (1.0 + V.diameter()))


@dataclass(frozen=True, eq=False)
class Conic:
    """Projective conic ``x^T A x = 0`` with ``A`` symmetric 3x3."""

    matrix: np.ndarray

    def __post_init__(self):
        a = np.array(self.matrix, dtype=float)
        if a.shape != (3, 3):
            raise DimensionMismatch(f"conic matrix must be 3x3, got {a.shape}")
        if not np.allclose(a, a.T, rtol=0, atol=1e-12 * (1 + np.abs(a).max())):
            raise ValueError("conic matrix must be symmetric")
        if not np.any(a):
            raise ValueError("conic matrix must be nonzero")
        object.__setattr__(self, "matrix", a)

    @classmethod
    def from_coefficients(cls, xx, xy, yy, x, y, const):
        """Conic ``xx*X^2 + xy*X*Y + yy*Y^2 + x*X + y*Y + const = 0``."""
        return cls(
            [[xx, xy / 2, x / 2], [xy / 2, yy, y / 2], [x / 2, y / 2, const]]
        )


def conic_center(C: Conic, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Pole of the line at infinity, in affine coordinates."""
    a = C.matrix
    block = a[:2, :2]
    s = np.linalg.svd(block, compute_uv=False)
    if s[-1] <= tol.bound(s[0]):
        raise NoAffineCenter("the pole of the line at infinity lies at infinity")
    return np.linalg.solve(block, -a[:2, 2])
