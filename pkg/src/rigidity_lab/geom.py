"""3D primitives, the triangulated-surface data model, and global predicates.

Vertices are plain ``(n, 3)`` float arrays.  Surfaces are sphere-topology
triangle meshes with outward-oriented faces; orientation is normalized at
ingestion (consistent winding by region growing, then a global flip if the
signed volume comes out negative).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from .errors import DegenerateVertexSet, InvalidSurface

# Degeneracy tolerance on unit-scale inputs; predicates rescale it by the
# coordinate magnitude raised to the quantity's length dimension.
TOL_GEOM = 1e-9
# Tolerance for the hull-extremality linear feasibility solve.
TOL_HULL = 1e-9


def coord_scale(points) -> float:
    """Max coordinate magnitude, floored at 1, used to scale tolerances."""
    points = np.asarray(points, dtype=float)
    if points.size == 0:
        return 1.0
    return max(1.0, float(np.max(np.abs(points))))


def orientation(p0, p1, p2, p3, tol: float = TOL_GEOM) -> int:
    """Sign of det(p1-p0, p2-p0, p3-p0); 0 when |det| <= tol * scale^3."""
    p0, p1, p2, p3 = (np.asarray(p, dtype=float) for p in (p0, p1, p2, p3))
    d = float(np.linalg.det(np.array([p1 - p0, p2 - p0, p3 - p0])))
    s = coord_scale(np.array([p0, p1, p2, p3]))
    if abs(d) <= tol * s**3:
        return 0
    return 1 if d > 0 else -1


def canonical_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass
class Violation:
    tag: str
    detail: str
    where: tuple = ()

    def __str__(self):
        return f"[{self.tag}] {self.detail} @ {self.where}"


@dataclass
class ValidityReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, tag, detail, where=()):
        self.violations.append(Violation(tag, detail, tuple(where)))

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def _orient_consistently(faces: list[tuple[int, int, int]]):
    """Propagate a consistent winding over face-adjacency; returns new faces.

    Raises InvalidSurface if two adjacent faces cannot be reconciled (the
    mesh is then not an orientable manifold along that edge).
    """
    faces = [tuple(f) for f in faces]
    edge_to_faces: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(faces):
        for k in range(3):
            e = canonical_edge(f[k], f[(k + 1) % 3])
            edge_to_faces.setdefault(e, []).append(fi)

    oriented: list[tuple[int, int, int] | None] = [None] * len(faces)
    for seed in range(len(faces)):
        if oriented[seed] is not None:
            continue
        oriented[seed] = faces[seed]
        stack = [seed]
        while stack:
            fi = stack.pop()
            f = oriented[fi]
            directed = {(f[k], f[(k + 1) % 3]) for k in range(3)}
            for k in range(3):
                e = canonical_edge(f[k], f[(k + 1) % 3])
                for gi in edge_to_faces[e]:
                    if gi == fi:
                        continue
                    g = faces[gi]
                    g_dir = {(g[k2], g[(k2 + 1) % 3]) for k2 in range(3)}
                    g_rev = {(b, a) for a, b in g_dir}
                    if oriented[gi] is None:
                        # Neighbor must traverse the shared edge oppositely.
                        if g_dir & directed:
                            oriented[gi] = (g[0], g[2], g[1])
                        else:
                            oriented[gi] = g
                        stack.append(gi)
                    else:
                        og = oriented[gi]
                        og_dir = {(og[k2], og[(k2 + 1) % 3]) for k2 in range(3)}
                        shared = directed & og_dir
                        if shared:
                            raise InvalidSurface(
                                f"non-orientable adjacency at edge {e}"
                            )
    return [f for f in oriented]


class PolyhedralSurface:
    """Closed triangle mesh: vertex coordinates plus oriented face triples."""

    def __init__(self, vertices, faces, orient: bool = True):
        self.vertices = np.asarray(vertices, dtype=float)
        faces = [tuple(int(i) for i in f) for f in faces]
        if orient and faces and self._faces_indexable(faces):
            try:
                faces = _orient_consistently(faces)
                if _signed_volume(self.vertices, faces) < 0:
                    faces = [(a, c, b) for a, b, c in faces]
            except InvalidSurface:
                pass  # leave as given; surface_validate will report it
        self.faces = faces
        self._report: ValidityReport | None = None

    def _faces_indexable(self, faces) -> bool:
        n = len(self.vertices)
        return all(0 <= i < n for f in faces for i in f)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Canonical (i<j) edge pairs, sorted lexicographically."""
        es = {canonical_edge(f[k], f[(k + 1) % 3]) for f in self.faces for k in range(3)}
        return sorted(es)

    def edge_length(self, e) -> float:
        i, j = e
        return float(np.linalg.norm(self.vertices[i] - self.vertices[j]))

    def copy_with_vertices(self, vertices) -> "PolyhedralSurface":
        return PolyhedralSurface(vertices, list(self.faces), orient=False)

    def validate(self) -> ValidityReport:
        if self._report is None:
            self._report = surface_validate(self)
        return self._report

    def require_valid(self):
        rep = self.validate()
        if not rep.ok:
            raise InvalidSurface(f"invalid surface: {rep}", report=rep)


def _signed_volume(vertices, faces) -> float:
    v = np.asarray(vertices, dtype=float)
    total = 0.0
    for a, b, c in faces:
        total += float(np.linalg.det(np.array([v[a], v[b], v[c]])))
    return total / 6.0


def face_area(p0, p1, p2) -> float:
    return 0.5 * float(np.linalg.norm(np.cross(p1 - p0, p2 - p0)))


def surface_validate(s: PolyhedralSurface) -> ValidityReport:
    """Check all surface invariants; every violation becomes a report entry."""
    rep = ValidityReport()
    v = s.vertices
    n = len(v)

    if v.ndim != 2 or (v.size and v.shape[1] != 3):
        rep.add("bad-shape", f"vertices must be (n, 3); got {v.shape}")
        return rep
    if not np.all(np.isfinite(v)):
        rep.add("non-finite", "vertex coordinates contain NaN/inf")
        return rep

    scale = coord_scale(v)
    for fi, f in enumerate(s.faces):
        if len(f) != 3:
            rep.add("bad-face", f"face has {len(f)} vertices", (fi,))
            continue
        if any(i < 0 or i >= n for i in f):
            rep.add("index-range", f"face {f} indexes out of range", (fi,))
            continue
        if len(set(f)) != 3:
            rep.add("repeated-vertex", f"face {f} repeats a vertex", (fi,))
            continue
        if face_area(v[f[0]], v[f[1]], v[f[2]]) <= TOL_GEOM * scale**2:
            rep.add("degenerate-face", f"face {f} has ~zero area", (fi,))
    if not rep.ok:
        return rep

    # Edge-manifold check with orientation: each undirected edge must be
    # traversed exactly once in each direction.
    directed: dict[tuple[int, int], int] = {}
    for f in s.faces:
        for k in range(3):
            d = (f[k], f[(k + 1) % 3])
            directed[d] = directed.get(d, 0) + 1
    seen = set()
    for (a, b), cnt in directed.items():
        e = canonical_edge(a, b)
        if e in seen:
            continue
        seen.add(e)
        fwd = cnt
        rev = directed.get((b, a), 0)
        if fwd + rev != 2:
            rep.add("edge-incidence",
                    f"edge {e} lies on {fwd + rev} faces, expected 2", e)
        elif fwd != 1 or rev != 1:
            rep.add("orientation", f"edge {e} traversed twice the same way", e)

    n_edges = len(seen)
    used = {i for f in s.faces for i in f}
    if used != set(range(n)):
        rep.add("unused-vertex", f"vertices {sorted(set(range(n)) - used)} unused")
    euler = n - n_edges + len(s.faces)
    if euler != 2:
        rep.add("euler", f"V - E + F = {euler}, expected 2 (sphere)")
    return rep


def volume(s: PolyhedralSurface) -> float:
    """Signed volume by the divergence theorem; positive for outward faces."""
    s.require_valid()
    return _signed_volume(s.vertices, s.faces)


def oriented_normal_sum(s: PolyhedralSurface):
    """Sum of oriented face normals; ~0 for any closed surface."""
    v = s.vertices
    total = np.zeros(3)
    for a, b, c in s.faces:
        total += 0.5 * np.cross(v[b] - v[a], v[c] - v[a])
    return total


def extreme_vertex_mask(points, tol: float = TOL_HULL):
    """True where a point is an extreme point of the convex hull of all points.

    Decided per point by a small linear-feasibility solve: the point is
    non-extreme iff it is (within tol * scale) a convex combination of the
    remaining points.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    scale = coord_scale(pts)
    mask = np.zeros(n, dtype=bool)
    for i in range(n):
        others = np.delete(pts, i, axis=0)
        m = len(others)
        # Variables (lambda_1..lambda_m, t): minimize t subject to
        # |others^T lambda - p_i|_inf <= t, sum lambda = 1, lambda >= 0.
        c = np.zeros(m + 1)
        c[-1] = 1.0
        a_ub = np.zeros((6, m + 1))
        b_ub = np.zeros(6)
        for k in range(3):
            a_ub[k, :m] = others[:, k]
            a_ub[k, m] = -1.0
            b_ub[k] = pts[i, k]
            a_ub[3 + k, :m] = -others[:, k]
            a_ub[3 + k, m] = -1.0
            b_ub[3 + k] = -pts[i, k]
        a_eq = np.zeros((1, m + 1))
        a_eq[0, :m] = 1.0
        res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=[1.0],
                      bounds=[(0, None)] * m + [(0, None)], method="highs")
        if not res.success:
            mask[i] = True  # infeasible: cannot be expressed, hence extreme
        else:
            mask[i] = res.fun > tol * scale
    return mask


def hull_boundary_mask(points, tol: float = TOL_HULL):
    """True where a point lies on the boundary of the convex hull."""
    pts = np.asarray(points, dtype=float)
    scale = coord_scale(pts)
    try:
        hull = ConvexHull(pts)
    except Exception as exc:  # degenerate (flat) vertex sets
        raise DegenerateVertexSet(f"convex hull failed: {exc}") from exc
    a = hull.equations[:, :3]
    b = hull.equations[:, 3]
    vals = pts @ a.T + b  # <= 0 inside
    return np.max(vals, axis=1) >= -tol * scale


def is_weakly_convex(s: PolyhedralSurface, tol: float = TOL_HULL):
    """Per-vertex hull extremality plus the overall verdict.

    A vertex is weakly-convex-admissible iff it is an extreme point of the
    convex hull of all vertices (equivalent to the supporting-plane
    definition for finite vertex sets).
    """
    s.require_valid()
    mask = extreme_vertex_mask(s.vertices, tol=tol)
    return mask, bool(np.all(mask))


def flat_vertex_mask(points, tol: float = TOL_HULL):
    """True where a point lies on the hull boundary without being extreme."""
    return hull_boundary_mask(points, tol=tol) & ~extreme_vertex_mask(points, tol=tol)
