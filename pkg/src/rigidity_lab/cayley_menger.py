"""Tetrahedron metric kernel: bordered distance matrix, its determinant and
edge cofactors, and the dihedral angle of an edge from the six lengths alone.

Vertex labels are 1..4; the length sextuple is ordered
(e12, e13, e14, e23, e24, e34).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadEdgeLabel, DegenerateTetra, NonPositiveLength, TriangleInequalityViolated

EDGE_ORDER = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

# Degeneracy threshold scale for the determinant (which grows like length^6)
# and for clamping the arccos argument near +-1.
TOL_D = 1e-12
TOL_CLAMP = 1e-9

# Face triples of the tetrahedron as index triples into EDGE_ORDER.
_FACES = (
    (0, 1, 3),  # vertices 1,2,3: e12, e13, e23
    (0, 2, 4),  # vertices 1,2,4: e12, e14, e24
    (1, 2, 5),  # vertices 1,3,4: e13, e14, e34
    (3, 4, 5),  # vertices 2,3,4: e23, e24, e34
)


def _normalize_edge(edge) -> tuple[int, int]:
    if isinstance(edge, int):
        edge = divmod(edge, 10)
    i, j = int(edge[0]), int(edge[1])
    if i > j:
        i, j = j, i
    if (i, j) not in EDGE_ORDER:
        raise BadEdgeLabel(f"edge must be one of 12,13,14,23,24,34; got {edge}")
    return i, j


@dataclass(frozen=True)
class TetraLengths:
    """Six edge lengths of a labeled tetrahedron."""

    e12: float
    e13: float
    e14: float
    e23: float
    e24: float
    e34: float

    def __post_init__(self):
        for name, val in self.items():
            if not (math.isfinite(val) and val > 0):
                raise NonPositiveLength(f"{name} = {val} must be finite and > 0")

    def items(self):
        return [(f"e{i}{j}", getattr(self, f"e{i}{j}")) for i, j in EDGE_ORDER]

    def as_array(self) -> np.ndarray:
        return np.array([v for _, v in self.items()], dtype=float)

    def get(self, edge) -> float:
        i, j = _normalize_edge(edge)
        return getattr(self, f"e{i}{j}")

    def with_edge(self, edge, value: float) -> "TetraLengths":
        i, j = _normalize_edge(edge)
        vals = dict(self.items())
        vals[f"e{i}{j}"] = float(value)
        return TetraLengths(**vals)

    @classmethod
    def from_array(cls, arr) -> "TetraLengths":
        arr = np.asarray(arr, dtype=float)
        return cls(*[float(x) for x in arr])

    @classmethod
    def from_points(cls, p1, p2, p3, p4) -> "TetraLengths":
        pts = [np.asarray(p, dtype=float) for p in (p1, p2, p3, p4)]
        return cls(*[float(np.linalg.norm(pts[i - 1] - pts[j - 1]))
                     for i, j in EDGE_ORDER])


def cm_matrix(lengths: TetraLengths) -> np.ndarray:
    """The 5x5 bordered squared-distance matrix."""
    sq = {e: v * v for e, v in zip(EDGE_ORDER, lengths.as_array())}
    m = np.zeros((5, 5))
    for (i, j), v in sq.items():
        m[i - 1, j - 1] = v
        m[j - 1, i - 1] = v
    m[4, :4] = 1.0
    m[:4, 4] = 1.0
    return m


def cm_determinant(lengths: TetraLengths) -> float:
    """Determinant D of the bordered matrix; D = 288 V^2 for volume V."""
    return float(np.linalg.det(cm_matrix(lengths)))


def cm_cofactor(lengths: TetraLengths, edge) -> float:
    """Signed cofactor D_ij attached to an edge.

    For edge ij the relevant cofactor sits at the position (k, l) given by
    the two complementary vertex labels: delete row k and column l of the
    bordered matrix and sign the minor with (-1)^(k+l).  For edge 12 this is
    row 3, column 4 with sign -1.
    """
    i, j = _normalize_edge(edge)
    k, l = sorted(set((1, 2, 3, 4)) - {i, j})
    m = cm_matrix(lengths)
    minor = np.delete(np.delete(m, k - 1, axis=0), l - 1, axis=1)
    return float((-1) ** (k + l) * np.linalg.det(minor))


def _face_violation(lengths: TetraLengths):
    arr = lengths.as_array()
    for face in _FACES:
        a, b, c = (arr[idx] for idx in face)
        if a >= b + c or b >= a + c or c >= a + b:
            return tuple(EDGE_ORDER[idx] for idx in face)
    return None


def is_valid_tetra(lengths: TetraLengths, tol_d: float = TOL_D) -> bool:
    """True iff all face triangle inequalities hold strictly and D > 0."""
    if _face_violation(lengths) is not None:
        return False
    threshold = tol_d * float(np.max(lengths.as_array())) ** 6
    return cm_determinant(lengths) > threshold


def dihedral_angle(lengths: TetraLengths, edge, tol_d: float = TOL_D,
                   tol_clamp: float = TOL_CLAMP) -> float:
    """Interior dihedral angle at an edge, in (0, pi).

    Uses arccos(D_ij / sqrt(2 e_ij^2 D + D_ij^2)); the argument is clamped
    to [-1, 1] when within tol_clamp of the boundary.
    """
    i, j = _normalize_edge(edge)
    bad = _face_violation(lengths)
    if bad is not None:
        raise TriangleInequalityViolated(f"face {bad} violates the triangle inequality")
    d = cm_determinant(lengths)
    threshold = tol_d * float(np.max(lengths.as_array())) ** 6
    if d <= threshold:
        raise DegenerateTetra(f"Cayley-Menger determinant {d} <= {threshold}")
    dij = cm_cofactor(lengths, (i, j))
    e = lengths.get((i, j))
    arg = dij / math.sqrt(2.0 * e * e * d + dij * dij)
    if arg > 1.0:
        if arg > 1.0 + tol_clamp:
            raise DegenerateTetra(f"arccos argument {arg} out of range")
        arg = 1.0
    elif arg < -1.0:
        if arg < -1.0 - tol_clamp:
            raise DegenerateTetra(f"arccos argument {arg} out of range")
        arg = -1.0
    return math.acos(arg)


def dihedral_angle_from_points(p1, p2, p3, p4, edge) -> float:
    """Coordinate oracle: dihedral angle at an edge via face normals."""
    pts = {1: np.asarray(p1, float), 2: np.asarray(p2, float),
           3: np.asarray(p3, float), 4: np.asarray(p4, float)}
    i, j = _normalize_edge(edge)
    k, l = sorted(set((1, 2, 3, 4)) - {i, j})
    axis = pts[j] - pts[i]
    u = pts[k] - pts[i]
    v = pts[l] - pts[i]
    # Components of u, v orthogonal to the shared edge.
    axis_hat = axis / np.linalg.norm(axis)
    u_perp = u - np.dot(u, axis_hat) * axis_hat
    v_perp = v - np.dot(v, axis_hat) * axis_hat
    cosang = np.dot(u_perp, v_perp) / (np.linalg.norm(u_perp) * np.linalg.norm(v_perp))
    return math.acos(min(1.0, max(-1.0, float(cosang))))
