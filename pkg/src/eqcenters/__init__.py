"""Geometric centers as maps that commute with rigid motions of R^n."""
from .centers import (
    Centroid,
    Conic,
    HWeighted,
    OrbitTransport,
    TriangleClassical,
    centroid,
    check_equivariance,
    circumcenter,
    conic_center,
    evaluate,
    h_weighted_center,
    incenter,
    make_orbit_center,
    orthocenter,
)
from .errors import (
    AffinelyDependent,
    AnchorNotFixed,
    Collinear,
    DimensionMismatch,
    EquifacetalInput,
    GeometryError,
    InvariantViolation,
    NoAffineCenter,
    NotEquifacetal,
    NotOrthogonal,
    OutOfDomain,
)
from .geometry import (
    Isometry,
    Tolerance,
    apply,
    compose,
    distance_matrix,
    inverse,
    random_isometry,
)
from .harness import (
    Certificate,
    CoincidenceReport,
    certificate_of_noncoincidence,
    isosceles_tetrahedron,
    random_simplex,
    regular_simplex,
    run_trials,
    verify_coincidence,
)
from .kernels import BACKEND
from .simplex import (
    Correspondence,
    Simplex,
    apply_pointwise,
    congruent,
    facets,
    is_affinely_independent,
    is_equifacetal,
)
from .symmetry import (
    AffineSubspace,
    SymmetryGroup,
    fixed_subspace,
    is_vertex_transitive,
    register,
    register_correspondence,
    symmetry_group,
)

__version__ = "0.1.0"
