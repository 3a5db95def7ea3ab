"""Distance-preserving permutation search and least-squares rigid alignment."""
from __future__ import annotations

import numpy as np

from . import kernels
from .errors import DimensionMismatch
from .geometry import DEFAULT_TOL, Isometry, Tolerance, as_points, distance_matrix


def _candidate_table(ds, dt, tol: Tolerance):
    rs = np.sort(ds, axis=1)
    rt = np.sort(dt, axis=1)
    diff = np.abs(rs[:, None, :] - rt[None, :, :])
    bound = tol.abs + tol.rel * np.maximum(np.abs(rs[:, None, :]), np.abs(rt[None, :, :]))
    compat = np.all(diff <= bound, axis=2)
    # most constrained first; ties broken by the sorted distance row
    keys = [(int(compat[i].sum()), tuple(rs[i])) for i in range(ds.shape[0])]
    order = sorted(range(ds.shape[0]), key=lambda i: keys[i])
    return compat, np.array(order, dtype=np.intp)


def distance_preserving_perms(S, T, tol: Tolerance = DEFAULT_TOL, limit: int = 0) -> np.ndarray:
    """All ``p`` with ``|S_i - S_j| = |T_p(i) - T_p(j)|`` (at most ``limit`` if > 0)."""
    ds = np.ascontiguousarray(distance_matrix(S))
    dt = np.ascontiguousarray(distance_matrix(T))
    if ds.shape != dt.shape:
        raise DimensionMismatch(f"point counts differ: {ds.shape[0]} vs {dt.shape[0]}")
    m = ds.shape[0]
    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    compat, order = _candidate_table(ds, dt, tol)
    if not compat.any(axis=1).all():
        return np.zeros((0, m), dtype=np.int64)
    return kernels.match_permutations(ds, dt, compat, order, tol.abs, tol.rel, limit)


def register_correspondence(S, T, perm=None, tol: Tolerance = DEFAULT_TOL) -> Isometry | None:
    """Rigid motion taking ``S[i]`` to ``T[perm[i]]``, or None if the fit is off.

    Centroid shift plus the orthogonal Procrustes factor of the centred
    cross-covariance; both determinant signs are tried and the one with the
    smaller residual wins, which also covers rank-deficient sets.
    """
    S = as_points(S)
    T = as_points(T)
    if S.shape != T.shape:
        raise DimensionMismatch(f"point sets have shapes {S.shape} and {T.shape}")
    m, n = S.shape
    if perm is None:
        perm = np.arange(m)
    Tp = T[np.asarray(perm, dtype=np.intp)]
    cs = S.mean(axis=0) if m else np.zeros(n)
    ct = Tp.mean(axis=0) if m else np.zeros(n)
    u, _, vt = np.linalg.svd((S - cs).T @ (Tp - ct))
    flip = np.eye(n)
    flip[-1, -1] = -1.0
    best, best_res = None, np.inf
    for d in (np.eye(n), flip):
        q = vt.T @ d @ u.T
        t = ct - q @ cs
        res = float(np.max(np.linalg.norm(S @ q.T + t - Tp, axis=1))) if m else 0.0
        if res < best_res:
            best, best_res = Isometry(q, t), res
    scale = max(float(np.max(np.abs(S))) if m else 0.0, float(np.max(np.abs(T))) if m else 0.0)
    if best_res <= tol.bound(scale):
        return best
    return None
