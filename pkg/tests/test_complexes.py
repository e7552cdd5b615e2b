import random
from itertools import combinations

import pytest

from simpdeg import (DimensionError, InvalidSimplex, NotInComplex,
                     OrientedSimplex, build_complex, canonical_form, faces,
                     is_face)
from simpdeg.gallery import triangle_fan


def test_canonical_form_identity():
    o = canonical_form([0, 1, 2])
    assert o.vertices == (0, 1, 2) and o.sign == 1


def test_canonical_form_transposition():
    o = canonical_form([1, 0, 2])
    assert o.vertices == (0, 1, 2) and o.sign == -1


def test_canonical_form_three_cycle():
    o = canonical_form([2, 0, 1])
    assert o.vertices == (0, 1, 2) and o.sign == 1


def test_canonical_form_duplicate_rejected():
    with pytest.raises(InvalidSimplex):
        canonical_form([1, 1, 2])
    with pytest.raises(InvalidSimplex):
        canonical_form([])


def test_oriented_simplex_flip():
    o = OrientedSimplex((0, 2), 1)
    assert o.flipped().sign == -1
    with pytest.raises(InvalidSimplex):
        OrientedSimplex((0, 1), 2)


# -- build_complex ------------------------------------------------------------

def test_closed_single_triangle():
    K = build_complex([(0, 1, 2)])
    assert K.f_vector() == (3, 3, 1)
    assert K.facets() == [(0, 1, 2)]


def brute_closure(simplices):
    out = set()
    for s in simplices:
        for k in range(1, len(s) + 1):
            out.update(combinations(s, k))
    return out


def test_closed_two_triangles_matches_subset_enumeration(two_triangles):
    want = brute_closure([(0, 1, 2), (1, 2, 3)])
    got = set(two_triangles.iter_simplices())
    assert got == want
    assert two_triangles.f_vector() == (4, 5, 2)
    assert set(two_triangles.facets()) == {(0, 1, 2), (1, 2, 3)}


def test_explicit_mode_stores_inputs_only():
    K = build_complex([(0, 1, 2), (1, 2, 3)], mode="explicit")
    assert K.f_vector() == (0, 0, 2)
    assert set(K.facets()) == {(0, 1, 2), (1, 2, 3)}
    assert (0, 1) not in K
    assert (0, 1, 2) in K


def test_build_deduplicates():
    K = build_complex([(0, 1), (1, 0), (0, 1)], mode="explicit")
    assert K.f_vector() == (0, 1)


# -- faces / is_face ----------------------------------------------------------

def test_faces_of_triangle():
    assert faces((0, 1, 2), 1) == [(0, 1), (0, 2), (1, 2)]


def test_faces_of_tetrahedron():
    assert len(faces((0, 1, 2, 3), 2)) == 4


def test_faces_identity_case():
    assert faces((5,), 0) == [(5,)]


def test_faces_out_of_range():
    with pytest.raises(DimensionError):
        faces((0, 1, 2), 3)
    with pytest.raises(DimensionError):
        faces((0, 1, 2), -1)


def test_is_face():
    assert is_face((1, 2), (0, 1, 2))
    assert not is_face((1, 3), (0, 1, 2))


# -- cofacets -----------------------------------------------------------------

def test_cofacets_brute_containment(two_triangles):
    got = two_triangles.cofacets((1, 2), 2)
    want = sorted(u for u in two_triangles.simplices(2) if {1, 2} <= set(u))
    assert got == want == [(0, 1, 2), (1, 2, 3)]


def test_cofacets_above_complex_dimension(single_triangle):
    assert single_triangle.cofacets((0,), 3) == []


def test_cofacets_at_own_dimension(two_triangles):
    assert two_triangles.cofacets((0, 1, 2), 2) == [(0, 1, 2)]


def test_cofacets_errors(two_triangles):
    with pytest.raises(NotInComplex):
        two_triangles.cofacets((0, 3), 2)
    with pytest.raises(DimensionError):
        two_triangles.cofacets((0, 1, 2), 1)


# -- facets and related -------------------------------------------------------

def test_facets_single_tetrahedron(single_tetrahedron):
    assert single_tetrahedron.facets() == [(0, 1, 2, 3)]


def test_triangle_fan_f2():
    assert triangle_fan().f_vector()[2] == 6


def test_facet_soundness(two_triangles):
    for q in range(two_triangles.dim + 1):
        for s in two_triangles.simplices(q):
            flagged = two_triangles.is_facet(s)
            alone = two_triangles.cofacets(s, q) == [s]
            above_empty = all(
                two_triangles.cofacets(s, qq) == []
                for qq in range(q + 1, two_triangles.dim + 1))
            assert flagged == (alone and above_empty)


def test_closure_property(two_triangles):
    for s in two_triangles.iter_simplices():
        for p in range(len(s)):
            for f in faces(s, p):
                assert f in two_triangles


def test_build_determinism_under_permutation():
    gens = [(0, 1, 2), (1, 2, 3), (3, 4), (4,), (2, 3, 5)]
    K1 = build_complex(gens)
    rng = random.Random(3)
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        K2 = build_complex(shuffled)
        assert K2.f_vector() == K1.f_vector()
        for q in range(K1.dim + 1):
            assert K2.simplices(q) == K1.simplices(q)
        assert K2.facets() == K1.facets()


def test_f_vector_consistency(two_triangles):
    counts = {}
    for s in two_triangles.iter_simplices():
        counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
    assert tuple(counts[q] for q in range(two_triangles.dim + 1)) == \
        two_triangles.f_vector()


def test_vertex_label_remap():
    K = build_complex([(10, 30, 20)])
    assert K.vertex_labels == (10, 20, 30)
    assert K.simplices(0) == ((0,), (1,), (2,))
    assert K.labels((0, 2)) == (10, 30)
    assert K.vertex_id(20) == 1


def test_empty_complex():
    K = build_complex([])
    assert K.dim == -1
    assert K.f_vector() == ()
    assert K.facets() == []
