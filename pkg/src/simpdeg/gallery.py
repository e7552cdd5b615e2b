"""Small hand-built complexes used by the documentation and the test suite.

Each builder returns a closed complex with a fully pinned-down structure,
so exact degree values and matrix entries can be asserted against them.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, build_complex

TRIANGLE_FAN_TRIANGLES = [
    (0, 1, 2), (0, 2, 4), (0, 3, 4), (0, 3, 5), (0, 4, 5), (3, 4, 5),
]

GLUED_BLUE = (0, 1, 2, 3)      # central tetrahedron
GLUED_GREEN = (0, 1, 4, 5)     # shares the edge (0, 1)
GLUED_WHITE = (1, 2, 3, 6)     # shares the triangle (1, 2, 3)
GLUED_PINK = (0, 7, 8, 9)      # shares only vertex 0
GLUED_YELLOW = (2, 10, 11)     # lone triangle sharing only vertex 2
GLUED_SHARED_EDGE = (0, 1)     # blue-green intersection


def triangle_fan() -> SimplicialComplex:
    """Six triangles on six vertices, five of them sharing vertex 0.

    The sixth triangle (3, 4, 5) closes a shell against the fan.  Its
    two-step boundary matrix and both derived Laplacians have small,
    fully known integer entries, which makes it the standard fixture for
    operator tests.
    """
    return build_complex(TRIANGLE_FAN_TRIANGLES, mode="closed")


def glued_tetrahedra() -> SimplicialComplex:
    """Four tetrahedra and a triangle glued to a central tetrahedron.

    Around the central (blue) tetrahedron: one tetrahedron glued along an
    edge, one along a triangle, one at a single vertex, and a lone
    triangle touching a different single vertex.  The shared blue-green
    edge (0, 1) has one endpoint in the vertex-glued tetrahedron and the
    other in the face-glued one, so its maximal adjacency structure is
    completely determined.
    """
    return build_complex(
        [GLUED_BLUE, GLUED_GREEN, GLUED_WHITE, GLUED_PINK, GLUED_YELLOW],
        mode="closed")


def vertex_bouquet() -> SimplicialComplex:
    """An edge, a triangle, a tetrahedron and a 4-simplex sharing vertex 0.

    The pieces meet only at the hub vertex, giving it classical degree 10
    and exactly one incident edge and one incident triangle that are not
    nested in anything larger.  Eleven vertices, twenty edges, fifteen
    triangles, six tetrahedra and one 4-simplex in total.
    """
    return build_complex(
        [(0, 1), (0, 2, 3), (0, 4, 5, 6), (0, 7, 8, 9, 10)],
        mode="closed")
