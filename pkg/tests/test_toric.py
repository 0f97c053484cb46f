import numpy as np

from bierfan import bier_sphere, canonical_fan, char_matrix, from_facets, is_orientable_real, is_regular, toric_report
from bierfan.bier import format_face, vertex_counts
from bierfan.simplicial import void


def test_char_matrix_void_3():
    cm = char_matrix(bier_sphere(void(3)))
    assert cm.labels == (4, 5, 6)  # 1', 2', 3'
    assert cm.columns == ((1, 0), (0, 1), (-1, -1))
    assert cm.shape == (2, 3)
    assert cm.unimodular


def test_char_matrix_worked_example(example_bier):
    cm = char_matrix(example_bier)
    assert cm.labels == (1, 2, 3, 5, 6)
    assert cm.columns == ((-1, 0), (0, -1), (1, 1), (0, 1), (-1, -1))
    assert np.array_equal(cm.matrix, np.array([[-1, 0, 1, 0, -1], [0, -1, 1, 1, -1]]))
    assert np.array_equal(cm.mod2, np.array([[1, 0, 1, 0, 1], [0, 1, 1, 1, 1]]))


def test_char_matrix_shape_formula(biers):
    for m in (2, 3, 4):
        for B in biers[m]:
            cm = char_matrix(B)
            assert cm.shape == (m - 1, vertex_counts(B.source)[0])
            assert cm.unimodular == bool(is_regular(canonical_fan(B)))


def test_report_void_3():
    rep = toric_report(bier_sphere(void(3)))
    assert rep.fh.h == (1, 1, 1)
    assert rep.betti == (1, 0, 1, 0, 1)
    assert rep.euler == 3
    assert rep.dims.dim_M == 4
    assert rep.ds_ok


def test_report_worked_example(example_bier):
    rep = toric_report(example_bier)
    assert rep.fh.h == (1, 3, 1)
    assert rep.betti == (1, 0, 3, 0, 1)
    assert rep.euler == 5 == len(example_bier.facets)
    assert rep.dims.dim_Z == 7
    assert rep.dims.dim_R == 2
    assert rep.dims.rank_H == 3
    assert rep.dims.dim_M_real == 2


def test_report_invariants(biers):
    for m, bs in biers.items():
        for B in bs[:: 1 if m < 5 else 7]:
            rep = toric_report(B)
            assert rep.ds_ok
            assert rep.euler == len(B.facets)
            assert rep.dims.rank_H + (m - 1) == len(B.geometric_vertices)
            assert all(b == 0 for b in rep.betti[1::2])
            assert rep.betti[::2] == rep.fh.h


def test_orientability_void_3():
    o = is_orientable_real(bier_sphere(void(3)))
    assert not o.criterion and not o.m_even and o.matches


def test_orientability_void_4():
    o = is_orientable_real(bier_sphere(void(4)))
    assert o.criterion and o.m_even and o.matches


def test_orientability_both_ghost_case():
    B = bier_sphere(from_facets(3, [[1, 2]]))
    assert sorted(format_face(f, 3) for f in B.facets) == sorted(["{1,2}", "{1,2'}", "{2,1'}", "{1',2'}"])
    assert 3 not in B.geometric_vertices and 6 not in B.geometric_vertices
    o = is_orientable_real(B)
    assert o.criterion and not o.m_even and not o.matches


def test_orientability_parity_when_m_is_visible(biers):
    for m in (2, 3, 4):
        for B in biers[m]:
            o = is_orientable_real(B)
            verts = B.geometric_vertices
            if m in verts or 2 * m in verts:
                assert o.matches
