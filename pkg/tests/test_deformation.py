import math

import numpy as np
import pytest

from rigidity_lab import generators as gen
from rigidity_lab.deformation import (
    deformation_space,
    rigidity_matrix,
    trivial_motions,
    twist_mode,
)

PI = math.pi


def test_rigidity_matrix_shape():
    s = gen.octahedron()
    r = rigidity_matrix(s)
    assert r.matrix.shape == (len(r.edges), 3 * len(s.vertices))
    assert r.n_vertices == 6
    assert len(r.edges) == 12


def test_trivial_motions_lie_in_null_space():
    for s in (gen.octahedron(),
              gen.schonhardt(gen.SchonhardtParams(PI / 6, 1.0, 2.0)),
              gen.pushed_vertex_pair()[1]):
        r = rigidity_matrix(s).matrix
        t = trivial_motions(s)
        assert t.shape == (6, 3 * len(s.vertices))
        assert np.max(np.abs(r @ t.T)) <= 1e-9 * max(1.0, np.max(np.abs(r)))
        # The six motions are linearly independent.
        assert np.linalg.matrix_rank(t) == 6


def test_octahedron_is_rigid():
    basis, verdict = deformation_space(gen.octahedron())
    assert basis.nullity == 6
    assert basis.trivial_dim == 6
    assert verdict.kind.value == "Rigid"


def test_schonhardt_critical_twist_is_flexible():
    s = gen.schonhardt(gen.SchonhardtParams(PI / 6, 1.0, 2.0))
    basis, verdict = deformation_space(s)
    assert basis.nullity == 7
    assert basis.trivial_dim == 6
    assert verdict.kind.value == "Flexible"


def test_schonhardt_off_critical_is_rigid():
    for theta in (PI / 12, PI / 4):
        s = gen.schonhardt(gen.SchonhardtParams(theta, 1.0, 2.0))
        basis, verdict = deformation_space(s)
        assert basis.nullity == 6
        assert verdict.kind.value == "Rigid"


def test_deformation_basis_annihilates_edge_lengths():
    s = gen.schonhardt(gen.SchonhardtParams(PI / 6, 1.0, 2.0))
    basis, _ = deformation_space(s)
    r = rigidity_matrix(s).matrix
    assert np.max(np.abs(r @ basis.basis.T)) <= 1e-7


def test_twist_mode_geometry():
    s = gen.schonhardt(gen.SchonhardtParams(PI / 6, 1.0, 2.0))
    basis, _ = deformation_space(s)
    mode = twist_mode(s, basis)
    assert mode.mode.shape == (6, 3)
    assert mode.bottom_residual <= 1e-9
    assert mode.plane_residual <= 1e-9
    assert mode.rotation_residual <= 1e-9
    # The mode is genuinely nontrivial.
    assert np.linalg.norm(mode.mode) > 1e-6


def test_pushed_pair_verdicts():
    convex, pushed = gen.pushed_vertex_pair()
    _, v_convex = deformation_space(convex)
    _, v_pushed = deformation_space(pushed)
    assert v_convex.kind.value == "Rigid"
    assert v_pushed.kind.value == "Flexible"
