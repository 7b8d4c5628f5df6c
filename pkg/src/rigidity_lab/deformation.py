"""First-principles rigidity oracle: the edge-length rigidity matrix, the
Killing-field (trivial motion) basis, null-space extraction by SVD, and the
twist-mode report for the twisted-antiprism flexibility analysis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateVertexSet, NoNontrivialMode
from .geom import PolyhedralSurface
from .stiffness import Verdict, VerdictKind

TOL_SV = 1e-8        # relative singular-value threshold for the null space
TOL_TRIVIAL = 1e-9   # rank tolerance for the projected Killing-field Gram matrix


@dataclass
class RigidityMatrix:
    matrix: np.ndarray        # |E| x 3|V|
    edges: tuple              # canonical edge order, row-aligned
    n_vertices: int


@dataclass
class DeformationBasis:
    nullity: int
    basis: np.ndarray         # (nullity, 3|V|), orthonormal rows
    trivial_dim: int
    spectral_gap: float       # smallest kept sv / largest dropped sv

    @property
    def nontrivial_dim(self) -> int:
        return self.nullity - self.trivial_dim


def rigidity_matrix(s: PolyhedralSurface) -> RigidityMatrix:
    """Row for edge (i, j) carries the block p_i - p_j in the vertex-i columns
    and its negative in the vertex-j columns, so R q = 0 is exactly the
    first-order length-preservation condition on every edge."""
    s.require_valid()
    p = s.vertices
    edges = s.edges
    r = np.zeros((len(edges), 3 * len(p)))
    for row, (i, j) in enumerate(edges):
        d = p[i] - p[j]
        r[row, 3 * i:3 * i + 3] = d
        r[row, 3 * j:3 * j + 3] = -d
    return RigidityMatrix(matrix=r, edges=edges, n_vertices=len(p))


def trivial_motions(s: PolyhedralSurface) -> np.ndarray:
    """Six Killing-field restrictions: the three coordinate translations and
    the three rotation fields e_axis x p. Returned as rows of a 6 x 3|V|
    array."""
    s.require_valid()
    p = s.vertices
    centered = p - p.mean(axis=0)
    _, sv, _ = np.linalg.svd(centered)
    if np.sum(sv > 1e-12 * max(1.0, sv[0])) < 2:
        raise DegenerateVertexSet("vertices are collinear; Killing fields are dependent")
    fields = []
    for axis in range(3):
        q = np.zeros_like(p)
        q[:, axis] = 1.0
        fields.append(q.ravel())
    for axis in range(3):
        e = np.zeros(3)
        e[axis] = 1.0
        fields.append(np.cross(e, p).ravel())
    return np.array(fields)


def deformation_space(s: PolyhedralSurface, tol_sv: float = TOL_SV):
    """Null space of the rigidity matrix via SVD thresholding at
    tol_sv * sigma_max; the verdict is Flexible iff the nullity exceeds the
    dimension of the projected trivial-motion subspace."""
    r = rigidity_matrix(s)
    a = r.matrix
    ncols = a.shape[1]
    _, sv, vt = np.linalg.svd(a, full_matrices=True)
    sigma_max = sv[0] if len(sv) else 0.0
    cut = tol_sv * max(sigma_max, 1e-300)
    rank = int(np.sum(sv > cut))
    kept = sv[rank - 1] if rank else np.inf
    dropped = sv[rank] if rank < len(sv) else 0.0
    gap = float(kept / dropped) if dropped > 0 else np.inf
    basis = vt[rank:ncols]
    nullity = basis.shape[0]

    triv = trivial_motions(s)
    proj = triv @ basis.T  # 6 x nullity projection coefficients
    gram = proj @ proj.T
    gram_eig = np.linalg.eigvalsh(gram)
    scale = max(1.0, float(gram_eig[-1])) if len(gram_eig) else 1.0
    trivial_dim = int(np.sum(gram_eig > TOL_TRIVIAL * scale))

    d = DeformationBasis(nullity=nullity, basis=basis, trivial_dim=trivial_dim,
                         spectral_gap=gap)
    evidence = {
        "path": "deformation-nullspace",
        "nullity": nullity,
        "trivial_dim": trivial_dim,
        "nontrivial_dim": d.nontrivial_dim,
        "spectral_gap": gap,
        "tol_sv": tol_sv,
    }
    kind = VerdictKind.FLEXIBLE if d.nontrivial_dim > 0 else VerdictKind.RIGID
    return d, Verdict(kind, evidence)


def _killing_fit(points: np.ndarray, q: np.ndarray):
    """Least-squares Killing field q_i ~ a + w x p_i on the given points;
    returns (a, w)."""
    n = len(points)
    m = np.zeros((3 * n, 6))
    for i, p in enumerate(points):
        m[3 * i:3 * i + 3, 0:3] = np.eye(3)
        # w x p written as a matrix acting on w
        m[3 * i:3 * i + 3, 3:6] = np.array([
            [0.0, p[2], -p[1]],
            [-p[2], 0.0, p[0]],
            [p[1], -p[0], 0.0],
        ])
    sol, *_ = np.linalg.lstsq(m, q.ravel(), rcond=None)
    return sol[:3], sol[3:]


@dataclass
class TwistModeReport:
    mode: np.ndarray              # (|V|, 3) gauge-fixed vectors
    bottom_residual: float        # max |q| over the fixed bottom vertices, relative
    plane_residual: float         # |<q(A), AE>|, |<q(A), AF>| max, relative
    rotation_residual: float      # symmetry of q(B), q(C) vs rotated q(A), relative
    evidence: dict = field(default_factory=dict)


def _rot_z(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def twist_mode(s: PolyhedralSurface, d: DeformationBasis) -> TwistModeReport:
    """Gauge-fix the nontrivial mode into the bottom-fixed convention
    q(D) = q(E) = q(F) = 0 (vertices 3, 4, 5) by subtracting the Killing
    field fitted on those three vertices, then report the residuals against
    the cylinder-tangency picture for the top vertices A, B, C (0, 1, 2)."""
    if d.nontrivial_dim < 1:
        raise NoNontrivialMode("deformation basis has no nontrivial mode")
    p = s.vertices
    triv = trivial_motions(s)
    # Orthonormalize the trivial fields and project them out of the kernel basis.
    tq, _ = np.linalg.qr(triv.T)
    resid = d.basis - (d.basis @ tq) @ tq.T
    u, sv, vt = np.linalg.svd(resid)
    mode = vt[0].reshape(-1, 3)

    a, w = _killing_fit(p[[3, 4, 5]], mode[[3, 4, 5]])
    mode = mode - a - np.cross(np.tile(w, (len(p), 1)), p)

    norm = float(np.max(np.linalg.norm(mode, axis=1)))
    if norm <= 0:
        raise NoNontrivialMode("mode vanishes after gauge fixing")
    bottom_res = float(np.max(np.linalg.norm(mode[[3, 4, 5]], axis=1))) / norm

    qa = mode[0]
    qa_norm = max(float(np.linalg.norm(qa)), 1e-300)
    ae = p[4] - p[0]
    af = p[5] - p[0]
    plane_res = max(abs(float(qa @ ae)), abs(float(qa @ af)))
    plane_res /= qa_norm * max(np.linalg.norm(ae), np.linalg.norm(af))

    rot_res = 0.0
    for idx, angle in ((1, 2.0 * np.pi / 3.0), (2, 4.0 * np.pi / 3.0)):
        pred = _rot_z(angle) @ qa
        rot_res = max(rot_res, float(np.linalg.norm(mode[idx] - pred)) / qa_norm)

    return TwistModeReport(
        mode=mode,
        bottom_residual=bottom_res,
        plane_residual=plane_res,
        rotation_residual=rot_res,
        evidence={"nontrivial_dim": d.nontrivial_dim},
    )
