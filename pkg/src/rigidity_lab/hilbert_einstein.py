"""Metric-side quantities of a triangulation: the admissible length domain,
total angles and curvatures at interior edges, the discrete Hilbert-Einstein
functional, and first-order identity checks (Schlafli residual, gradient).

Boundary edge lengths are always the Euclidean ones from the surface
coordinates; only interior edge lengths vary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cayley_menger import EDGE_ORDER, TetraLengths, dihedral_angle, is_valid_tetra
from .errors import OutOfDomain
from .geom import canonical_edge
from .triangulation import Triangulation

TWO_PI = 2.0 * np.pi


@dataclass
class EdgeLengthAssignment:
    """Interior lengths aligned with ``interior_edges`` ordering plus the
    fixed boundary lengths."""

    interior: np.ndarray
    boundary: np.ndarray

    def __post_init__(self):
        self.interior = np.atleast_1d(np.asarray(self.interior, dtype=float))
        self.boundary = np.atleast_1d(np.asarray(self.boundary, dtype=float))

    def with_interior(self, interior) -> "EdgeLengthAssignment":
        return EdgeLengthAssignment(np.asarray(interior, dtype=float), self.boundary)


@dataclass
class AngleData:
    omega: np.ndarray           # total angle around each interior edge
    kappa: np.ndarray           # 2*pi - omega
    boundary_alpha: np.ndarray  # dihedral angle sums at boundary edges


def euclidean_lengths(t: Triangulation) -> EdgeLengthAssignment:
    """The length assignment realized by the coordinates."""
    pts = t.points
    interior = np.array([np.linalg.norm(pts[i] - pts[j]) for i, j in t.interior_edges])
    boundary = np.array([np.linalg.norm(pts[i] - pts[j]) for i, j in t.boundary_edges])
    return EdgeLengthAssignment(interior, boundary)


def _length_lookup(t: Triangulation, l: EdgeLengthAssignment):
    table = {}
    for e, val in zip(t.interior_edges, l.interior):
        table[e] = float(val)
    for e, val in zip(t.boundary_edges, l.boundary):
        table[e] = float(val)
    return table


def _tet_lengths(tet, table) -> TetraLengths:
    vals = [table[canonical_edge(tet[i - 1], tet[j - 1])] for i, j in EDGE_ORDER]
    return TetraLengths(*vals)


def in_domain(t: Triangulation, l: EdgeLengthAssignment) -> bool:
    """True iff every tetra, with interior lengths substituted, stays a
    non-degenerate Euclidean tetrahedron."""
    t.require_valid()
    if np.any(l.interior <= 0) or np.any(l.boundary <= 0):
        return False
    table = _length_lookup(t, l)
    for tet in t.tetrahedra:
        try:
            if not is_valid_tetra(_tet_lengths(tet, table)):
                return False
        except Exception:
            return False
    return True


def _round_sig(x: float, sig: int) -> float:
    if x == 0.0:
        return 0.0
    return float(np.format_float_positional(
        x, precision=sig, unique=False, fractional=False))


def total_angles(t: Triangulation, l: EdgeLengthAssignment,
                 round_sig: int | None = None) -> AngleData:
    """Sum tetra dihedral angles around every interior and boundary edge.

    If round_sig is given, each dihedral angle is rounded to that many
    significant figures before summation. This replicates published hand
    computations that transcribed angles at display precision; leave it None
    for full-precision work."""
    t.require_valid()
    if not in_domain(t, l):
        raise OutOfDomain("length assignment leaves the admissible domain")
    table = _length_lookup(t, l)
    interior_index = {e: k for k, e in enumerate(t.interior_edges)}
    boundary_index = {e: k for k, e in enumerate(t.boundary_edges)}
    omega = np.zeros(len(interior_index))
    alpha = np.zeros(len(boundary_index))
    for tet in t.tetrahedra:
        lengths = _tet_lengths(tet, table)
        for i, j in EDGE_ORDER:
            e = canonical_edge(tet[i - 1], tet[j - 1])
            if e in interior_index or e in boundary_index:
                ang = dihedral_angle(lengths, (i, j))
                if round_sig is not None:
                    ang = _round_sig(ang, round_sig)
                if e in interior_index:
                    omega[interior_index[e]] += ang
                else:
                    alpha[boundary_index[e]] += ang
    return AngleData(omega=omega, kappa=TWO_PI - omega, boundary_alpha=alpha)


def curvatures(angles: AngleData) -> np.ndarray:
    return TWO_PI - angles.omega


def he_value(t: Triangulation, l: EdgeLengthAssignment) -> float:
    """HE = sum_i l_i kappa_i + sum_j l'_j (pi - alpha_j)."""
    a = total_angles(t, l)
    interior_term = float(np.dot(l.interior, a.kappa)) if len(l.interior) else 0.0
    boundary_term = float(np.dot(l.boundary, np.pi - a.boundary_alpha))
    return interior_term + boundary_term


def schlafli_residual(lengths: TetraLengths, direction, h: float) -> float:
    """Central-difference value of sum_e l_e dalpha_e along a length direction;
    tends to 0 as h -> 0 by the Euclidean Schlafli formula."""
    direction = np.asarray(direction, dtype=float)
    base = lengths.as_array()
    plus = TetraLengths.from_array(base + h * direction)
    minus = TetraLengths.from_array(base - h * direction)
    total = 0.0
    for e in EDGE_ORDER:
        dalpha = (dihedral_angle(plus, e) - dihedral_angle(minus, e)) / (2.0 * h)
        total += lengths.get(e) * dalpha
    return total


def he_gradient_check(t: Triangulation, l: EdgeLengthAssignment, h: float) -> float:
    """Max componentwise gap between the central-difference HE gradient and
    the curvature vector (dHE = sum kappa_i dl_i)."""
    n = len(l.interior)
    if n == 0:
        return 0.0
    kappa = total_angles(t, l).kappa
    worst = 0.0
    for i in range(n):
        step = np.zeros(n)
        step[i] = h
        hi = he_value(t, l.with_interior(l.interior + step))
        lo = he_value(t, l.with_interior(l.interior - step))
        worst = max(worst, abs((hi - lo) / (2.0 * h) - kappa[i]))
    return worst
