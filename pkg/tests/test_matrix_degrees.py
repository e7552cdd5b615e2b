import pytest

from simpdeg import (DimensionError, ModeError, MatrixDegrees, build_complex,
                     deg_A_p_matrix, deg_A_p_maximal_matrix, deg_L_p_matrix,
                     deg_U_p_matrix, deg_A_p, deg_A_p_maximal, deg_L_p, deg_U_p)
from simpdeg.gallery import triangle_fan
from simpdeg.oracles import random_closed_complex


def test_lower_degree_matches_combinatorial_on_fan():
    K = triangle_fan()
    calc = MatrixDegrees(K)
    for q in range(K.dim + 1):
        for s in K.simplices(q):
            for p in range(0, min(q + 1, 2)):
                assert deg_L_p_matrix(K, s, p, calc) == deg_L_p(K, s, p)


def test_upper_degree_matches_combinatorial_on_tetrahedron():
    K = build_complex([(0, 1, 2, 3)])
    calc = MatrixDegrees(K)
    for q in range(K.dim + 1):
        for s in K.simplices(q):
            for p in range(1, 4):
                if p < q:
                    continue
                assert deg_U_p_matrix(K, s, p, calc) == deg_U_p(K, s, p)


def test_self_term_overcounts_by_exactly_one():
    # dropping the self-exclusion overcounts by one whenever the target
    # appears in its own sum (always, for the lower route)
    K = triangle_fan()
    calc = MatrixDegrees(K)
    for q in range(K.dim + 1):
        for s in K.simplices(q)[:2]:
            j = K.index_of(s)
            for p in range(0, q + 1):
                raw = sum(calc.lower_order_block(q, q2, p).getrow(j).nnz
                          for q2 in range(p, K.dim + 1))
                assert raw - deg_L_p_matrix(K, s, p, calc) == 1
    # the upper route self term exists exactly when the target has a
    # p-dimensional coface
    s = (3, 4, 5)
    j = K.index_of(s)
    raw = sum(calc.upper_order_block(2, q2, 2).getrow(j).nnz for q2 in range(3))
    assert raw - deg_U_p_matrix(K, s, 2, calc) == 1


def test_upper_degree_without_coface_is_zero():
    # an edge of the lone triangle has no tetrahedron above it; the raw
    # formula would give -1 without the conditional self term
    K = build_complex([(0, 1, 2), (2, 3)])
    assert deg_U_p_matrix(K, (0, 1), 3) == 0 == deg_U_p(K, (0, 1), 3)


def test_adjacency_matrix_path(two_triangles):
    calc = MatrixDegrees(two_triangles)
    for q in range(two_triangles.dim + 1):
        for s in two_triangles.simplices(q):
            for p in range(q + 1):
                assert deg_A_p_matrix(two_triangles, s, p, calc) == \
                    deg_A_p(two_triangles, s, p)
                assert deg_A_p_maximal_matrix(two_triangles, s, p, calc) == \
                    deg_A_p_maximal(two_triangles, s, p)


def test_matrix_paths_on_random_complexes():
    for seed in (3, 5, 8):
        K = random_closed_complex(seed, max_vertices=8, max_dim=3)
        calc = MatrixDegrees(K)
        for q in range(K.dim + 1):
            for s in K.simplices(q)[:4]:
                for p in range(q + 1):
                    assert deg_L_p_matrix(K, s, p, calc) == deg_L_p(K, s, p)
                    assert deg_A_p_matrix(K, s, p, calc) == deg_A_p(K, s, p)
                    assert deg_A_p_maximal_matrix(K, s, p, calc) == \
                        deg_A_p_maximal(K, s, p)
                for p in range(q, K.dim + 1):
                    assert deg_U_p_matrix(K, s, p, calc) == deg_U_p(K, s, p)


def test_matrix_cap():
    K = triangle_fan()
    calc = MatrixDegrees(K, max_matrix_simplices=3)
    with pytest.raises(DimensionError):
        calc.lower_degree((0, 1), 0)


def test_matrix_path_requires_closed_mode():
    E = build_complex([(0, 1, 2)], mode="explicit")
    with pytest.raises(ModeError):
        MatrixDegrees(E)
