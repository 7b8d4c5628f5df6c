"""rigidity_lab: infinitesimal rigidity of triangulated polyhedra.

Two independent oracles decide infinitesimal rigidity:

* the spectral route through the stiffness matrix M_T of the discrete
  Hilbert-Einstein functional (:mod:`rigidity_lab.stiffness`), and
* the direct route through the rigidity matrix of infinitesimal isometric
  deformations (:mod:`rigidity_lab.deformation`).

Supporting modules supply geometry predicates, Cayley-Menger machinery,
triangulation search, the functional itself, and a catalogue of generators.
"""

from .errors import (
    BadEdgeLabel,
    BadParams,
    BadRange,
    DegenerateDepth,
    DegenerateTetra,
    DegenerateVertexSet,
    ImaginaryHeight,
    InvalidSurface,
    InvalidTriangulation,
    NoNontrivialMode,
    NonPositiveLength,
    NotConvex,
    OutOfDomain,
    ParseError,
    RigidityLabError,
    SelfIntersecting,
    TooManyVertices,
    TriangleInequalityViolated,
    UnknownGenerator,
)
from .geom import (
    PolyhedralSurface,
    ValidityReport,
    Violation,
    is_weakly_convex,
    surface_validate,
    volume,
)
from .cayley_menger import (
    TetraLengths,
    cm_cofactor,
    cm_determinant,
    cm_matrix,
    dihedral_angle,
    dihedral_angle_from_points,
    is_valid_tetra,
)
from .triangulation import (
    BudgetExceeded,
    NonDecomposable,
    Triangulation,
    VertexCensus,
    fan_triangulation,
    find_decomposition,
    vertex_census,
)
from .hilbert_einstein import (
    AngleData,
    EdgeLengthAssignment,
    curvatures,
    euclidean_lengths,
    he_gradient_check,
    he_value,
    schlafli_residual,
    total_angles,
)
from .stiffness import (
    DEFAULT_SCHEME,
    PAPER_SCHEME,
    FDScheme,
    SchemeKind,
    Spectrum,
    StiffnessMatrix,
    Verdict,
    VerdictKind,
    assemble_mt,
    jacobi_eigenvalues,
    rigidity_verdict,
    spectrum,
    theorem1_check,
)
from .deformation import (
    DeformationBasis,
    RigidityMatrix,
    TwistModeReport,
    deformation_space,
    rigidity_matrix,
    trivial_motions,
    twist_mode,
)

__version__ = "0.1.0"

__all__ = [
    "AngleData",
    "BadEdgeLabel",
    "BadParams",
    "BadRange",
    "BudgetExceeded",
    "DEFAULT_SCHEME",
    "DeformationBasis",
    "DegenerateDepth",
    "DegenerateTetra",
    "DegenerateVertexSet",
    "EdgeLengthAssignment",
    "FDScheme",
    "ImaginaryHeight",
    "InvalidSurface",
    "InvalidTriangulation",
    "NoNontrivialMode",
    "NonDecomposable",
    "NonPositiveLength",
    "NotConvex",
    "OutOfDomain",
    "PAPER_SCHEME",
    "ParseError",
    "PolyhedralSurface",
    "RigidityLabError",
    "RigidityMatrix",
    "SchemeKind",
    "SelfIntersecting",
    "Spectrum",
    "StiffnessMatrix",
    "TetraLengths",
    "TooManyVertices",
    "TriangleInequalityViolated",
    "Triangulation",
    "TwistModeReport",
    "UnknownGenerator",
    "ValidityReport",
    "Verdict",
    "VerdictKind",
    "VertexCensus",
    "Violation",
    "assemble_mt",
    "cm_cofactor",
    "cm_determinant",
    "cm_matrix",
    "curvatures",
    "deformation_space",
    "dihedral_angle",
    "dihedral_angle_from_points",
    "euclidean_lengths",
    "fan_triangulation",
    "find_decomposition",
    "he_gradient_check",
    "he_value",
    "is_valid_tetra",
    "is_weakly_convex",
    "jacobi_eigenvalues",
    "rigidity_matrix",
    "rigidity_verdict",
    "schlafli_residual",
    "spectrum",
    "surface_validate",
    "theorem1_check",
    "total_angles",
    "trivial_motions",
    "twist_mode",
    "vertex_census",
    "volume",
    "__version__",
]
