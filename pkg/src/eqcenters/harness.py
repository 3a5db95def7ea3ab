"""Desk-scale check that all centers of V coincide exactly when V is equifacetal.

Equifacetal inputs get a ``CoincidenceReport``; everything else gets a
``Certificate``: a concrete center whose value at V differs from the centroid.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .centers import HWeighted, OrbitTransport, centroid, check_equivariance, evaluate, h_distances
from .errors import EquifacetalInput, GeometryError, InvariantViolation, NotEquifacetal
from .geometry import DEFAULT_TOL, Tolerance, random_isometry
from .simplex import Simplex, as_simplex, is_affinely_independent, is_equifacetal
from .symmetry import fixed_subspace, symmetry_group

MAX_REGULAR_DIM = 7
CERT_EQUIVARIANCE_TRIALS = 100
SEPARATION_FACTOR = 1e3
TOTAL_CENTERS = (("centroid", lambda V: centroid(V)), ("h_weighted", lambda V: evaluate(HWeighted(), V)))


def regular_simplex(n: int) -> Simplex:
    """Unit-edge regular simplex in R^n with its centroid at the origin."""
    if not 1 <= n <= MAX_REGULAR_DIM:
        raise ValueError(f"regular_simplex supports 1 <= n <= {MAX_REGULAR_DIM}, got {n}")
    # standard basis of R^{n+1}, centred, expressed in an orthonormal basis of
    # the hyperplane sum(x) = 0
    e = np.eye(n + 1) - 1.0 / (n + 1)
    basis = np.linalg.svd(e)[2][:n]
    pts = e @ basis.T / np.sqrt(2.0)
    if n == 1:
        pts = pts - pts.min()
        pts = np.sort(pts, axis=0)
    return Simplex(pts)


def isosceles_tetrahedron(x: float, y: float, z: float, allow_regular: bool = False) -> Simplex:
    if min(x, y, z) <= 0:
        raise ValueError("isosceles tetrahedron parameters must be positive")
    if x == y == z and not allow_regular:
        raise ValueError("equal parameters give a regular tetrahedron; pass allow_regular=True")
    return Simplex([(x, y, z), (x, -y, -z), (-x, y, -z), (-x, -y, z)])


def random_simplex(n: int, seed: int, tol: Tolerance = DEFAULT_TOL, max_tries: int = 1000) -> Simplex:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        V = Simplex(rng.uniform(-1.0, 1.0, size=(n + 1, n)))
        if is_affinely_independent(V, tol):
            return V
    raise ValueError(f"no affinely independent sample in {max_tries} tries at {tol}")


@dataclass(frozen=True, eq=False)
class CoincidenceReport:
    simplex: Simplex
    the_point: np.ndarray
    centers_checked: list
    fixed_dim: int | None = None

    @property
    def max_residual(self) -> float:
        return max((r for _, _, r in self.centers_checked), default=0.0)


@dataclass(frozen=True, eq=False)
class Certificate:
    simplex: Simplex
    centroid_value: np.ndarray
    witness_center: object
    witness_value: np.ndarray
    separation: float
    branch: str = field(default="")


def verify_coincidence(V, tol: Tolerance = DEFAULT_TOL) -> CoincidenceReport:
    V = as_simplex(V)
    if not is_equifacetal(V, tol):
        raise NotEquifacetal("simplex is not equifacetal")
    bound = tol.abs * (1.0 + V.diameter())
    fixed_dim = None
    if is_affinely_independent(V, tol):
        F = fixed_subspace(symmetry_group(V, tol), tol)
        fixed_dim = F.dim
        if F.dim != 0:
            raise InvariantViolation(
                f"equifacetal simplex has a {F.dim}-dimensional fixed subspace"
            )
        the_point = F.base_point
        checked = [("fixed_point", the_point, 0.0)]
    else:
        the_point = centroid(V)
        checked = []
    for name, fn in TOTAL_CENTERS:
        value = fn(V)
        checked.append((name, value, float(np.linalg.norm(value - the_point))))
    bad = [(name, r) for name, _, r in checked if r > bound]
    if bad:
        raise InvariantViolation(f"centers disagree on an equifacetal simplex: {bad}")
    return CoincidenceReport(V, the_point, checked, fixed_dim)


def _equivariance_ok(Z, V, tol, seed, trials=CERT_EQUIVARIANCE_TRIALS) -> bool:
    scale = 1.0 + float(np.max(np.abs(V.vertices)))
    return all(
        check_equivariance(Z, V, random_isometry(seed * 1_000_003 + k, V.dim, scale), tol)
        for k in range(trials)
    )


def certificate_of_noncoincidence(V, tol: Tolerance = DEFAULT_TOL, seed: int = 0) -> Certificate:
    V = as_simplex(V)
    if is_equifacetal(V, tol):
        raise EquifacetalInput("equifacetal simplices admit no certificate")
    c = centroid(V)
    diam = V.diameter()
    if not is_affinely_independent(V, tol):
        h = h_distances(V)
        if np.allclose(h, h[0], rtol=0, atol=tol.bound(h.max())):
            raise InvariantViolation(
                "degenerate non-equifacetal simplex with all h_i equal: "
                "the h-weighted center coincides with the centroid here"
            )
        witness, branch = HWeighted(), "affinely_dependent"
    else:
        F = fixed_subspace(symmetry_group(V, tol), tol)
        if F.dim == 0:
            raise InvariantViolation(
                "non-equifacetal independent simplex has a single fixed point"
            )
        witness = OrbitTransport(V, c + diam * F.directions[0], tol)
        branch = "affinely_independent"
    value = evaluate(witness, V, tol)
    sep = float(np.linalg.norm(value - c))
    if sep <= SEPARATION_FACTOR * tol.abs * (1.0 + diam):
        raise InvariantViolation(f"certificate separation {sep:.3g} is within tolerance noise")
    if not _equivariance_ok(witness, V, tol, seed):
        raise InvariantViolation(f"{witness.name} witness failed the equivariance check")
    return Certificate(V, c, witness, value, sep, branch)


def canned_equifacetal(dims) -> list[tuple[str, Simplex]]:
    out = []
    for n in dims:
        if 1 <= n <= MAX_REGULAR_DIM:
            out.append((f"regular_{n}", regular_simplex(n)))
    if 3 in dims:
        for x, y, z in [(1, 2, 3), (0.5, 1.5, 2.5), (2, 2, 1)]:
            out.append((f"isosceles_tetrahedron_{x}_{y}_{z}", isosceles_tetrahedron(x, y, z)))
    return out


def canned_degenerate() -> list[tuple[str, Simplex]]:
    return [("double_point_segment", Simplex([(0, 0), (0, 0), (3, 0)]))]


def run_trials(dims, count: int, seed: int, tol: Tolerance = DEFAULT_TOL) -> dict:
    """Route generated and canned instances through both directions.

    Each instance carries an expected outcome (coincidence for the canned
    equifacetal families, certificate for random and canned degenerate
    ones); any mismatch or raised error is recorded as a failure.
    """
    dims = sorted(set(int(d) for d in dims))
    instances = []
    for name, V in canned_equifacetal(dims):
        instances.append((V.dim, name, V, "coincidence"))
    if 2 in dims:
        for name, V in canned_degenerate():
            instances.append((2, name, V, "certificate"))
    for n in dims:
        for k in range(count):
            s = seed * 1_000_003 + 7919 * n + k
            instances.append((n, f"random_{n}_{k}", random_simplex(n, s), "certificate"))

    per_dim = {}
    failures = []
    for idx, (n, name, V, expected) in enumerate(instances):
        row = per_dim.setdefault(
            n, {"instances": 0, "coincidences": 0, "certificates": 0, "failures": 0,
                "max_residual": 0.0, "min_separation": None}
        )
        row["instances"] += 1
        try:
            if is_equifacetal(V, tol):
                got = "coincidence"
                rep = verify_coincidence(V, tol)
                row["max_residual"] = max(row["max_residual"], float(rep.max_residual))
            else:
                got = "certificate"
                cert = certificate_of_noncoincidence(V, tol, seed=seed + idx)
                ms = row["min_separation"]
                row["min_separation"] = cert.separation if ms is None else min(ms, cert.separation)
            if got != expected:
                raise InvariantViolation(f"expected {expected}, got {got}")
            row[got + "s"] += 1
        except GeometryError as exc:
            row["failures"] += 1
            failures.append({"instance": name, "dim": n, "error": type(exc).__name__, "detail": str(exc)})

    summary = {
        "seed": seed,
        "dims": dims,
        "count": count,
        "tolerance": {"abs": float(tol.abs), "rel": float(tol.rel)},
        "per_dim": {str(n): row for n, row in sorted(per_dim.items())},
        "total_instances": len(instances),
        "total_failures": len(failures),
        "failures": failures,
    }
    return summary


def parameter_grid(values=(0.5, 1.0, 1.5, 2.0, 3.0)):
    return list(itertools.product(values, repeat=3))
