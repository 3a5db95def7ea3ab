"""Points, isometries of E(n), and the shared tolerance policy.

Isometries use the column-vector convention ``p -> Q @ p + t``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotOrthogonal

ORTHO_TOL = 1e-8


@dataclass(frozen=True)
class Tolerance:
    """Absolute + relative comparison rule for lengths."""

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if not (self.abs >= 0 and self.rel >= 0):
            raise ValueError("tolerances must be non-negative")

    def bound(self, scale: float) -> float:
        return self.abs + self.rel * abs(scale)

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.bound(max(abs(a), abs(b)))


DEFAULT_TOL = Tolerance()


def as_point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite coordinates: {arr}")
    return arr


def as_points(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a list of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coordinates")
    return arr


@dataclass(frozen=True, eq=False)
class Isometry:
    linear: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        q = np.array(self.linear, dtype=float)
        t = np.array(self.translation, dtype=float).reshape(-1)
        if q.ndim != 2 or q.shape[0] != q.shape[1] or q.shape[0] != t.shape[0]:
            raise DimensionMismatch(f"linear {q.shape} vs translation {t.shape}")
        q.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "linear", q)
        object.__setattr__(self, "translation", t)

    @property
    def dim(self) -> int:
        return self.translation.shape[0]

    @classmethod
    def identity(cls, dim: int) -> "Isometry":
        return cls(np.eye(dim), np.zeros(dim))

    @classmethod
    def translation_by(cls, t) -> "Isometry":
        t = as_point(t)
        return cls(np.eye(t.shape[0]), t)

    def orthogonality_error(self) -> float:
        q = self.linear
        return float(np.linalg.norm(q.T @ q - np.eye(self.dim)))

    def is_orthogonal(self) -> bool:
        return self.orthogonality_error() <= ORTHO_TOL

    def allclose(self, other: "Isometry", atol: float = 1e-8) -> bool:
        return (
            self.dim == other.dim
            and np.allclose(self.linear, other.linear, atol=atol, rtol=0)
            and np.allclose(self.translation, other.translation, atol=atol, rtol=0)
        )

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return compose(self, other)

    def __repr__(self):
        return f"Isometry(linear={self.linear.tolist()}, translation={self.translation.tolist()})"


def _check_dim(g: Isometry, n: int):
    if g.dim != n:
        raise DimensionMismatch(f"isometry acts on R^{g.dim}, got R^{n}")


def apply(g: Isometry, p) -> np.ndarray:
    p = as_point(p)
    _check_dim(g, p.shape[0])
    return g.linear @ p + g.translation


def apply_many(g: Isometry, points) -> np.ndarray:
    pts = as_points(points)
    _check_dim(g, pts.shape[1])
    return pts @ g.linear.T + g.translation


def compose(g: Isometry, h: Isometry) -> Isometry:
    """Return ``g . h``, i.e. apply ``h`` first."""
    if g.dim != h.dim:
        raise DimensionMismatch(f"cannot compose R^{g.dim} with R^{h.dim}")
    return Isometry(g.linear @ h.linear, g.linear @ h.translation + g.translation)


def inverse(g: Isometry) -> Isometry:
    err = g.orthogonality_error()
    if err > ORTHO_TOL:
        raise NotOrthogonal(f"linear part is not orthogonal (|Q^T Q - I| = {err:.3g})")
    qt = g.linear.T
    return Isometry(qt, -qt @ g.translation)


def rotation2d(theta: float, center=(0.0, 0.0)) -> Isometry:
    c, s = np.cos(theta), np.sin(theta)
    q = np.array([[c, -s], [s, c]])
    center = as_point(center)
    return Isometry(q, center - q @ center)


def reflection(normal, offset: float = 0.0) -> Isometry:
    """Reflection across the hyperplane ``normal . x = offset``."""
    u = as_point(normal)
    u = u / np.linalg.norm(u)
    q = np.eye(u.shape[0]) - 2.0 * np.outer(u, u)
    return Isometry(q, 2.0 * offset * u)


def random_isometry(seed: int, dim: int, translation_scale: float = 1.0) -> Isometry:
    """Seeded random element of E(n); determinant sign is a fair coin."""
    if dim < 1:
        raise ValueError("dim must be >= 1")
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    q = q * np.sign(np.diag(r))
    if (np.linalg.det(q) > 0) != (rng.random() < 0.5):
        q[:, 0] = -q[:, 0]
    t = rng.uniform(-translation_scale, translation_scale, size=dim)
    return Isometry(q, t)


def distance_matrix(points) -> np.ndarray:
    pts = as_points(points)
    diff = pts[:, None, :] - pts[None, :, :]
    d = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    np.fill_diagonal(d, 0.0)
    return d


def diameter(points) -> float:
    d = distance_matrix(points)
    return float(d.max()) if d.size else 0.0
