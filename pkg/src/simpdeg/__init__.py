"""Simplicial complexes, higher-order degrees, and multi-parameter Laplacians."""

from .boundary import (Chain, SparseIntMatrix, boundary_matrix, boundary_of,
                       coboundary_matrix, epsilon_sign, odeg_L, odeg_U,
                       sig_L, sig_U, sign_of)
from .complexes import (OrientedSimplex, Simplex, SimplicialComplex,
                        as_simplex, build_complex, canonical_form, faces,
                        is_face)
from .degrees import (DegreeKind, DegreeQuery, DegreeResult, adj_p, deg_A_p,
                      deg_A_p_maximal, deg_L_hp, deg_L_hp_strict, deg_L_p,
                      deg_L_p_strict, deg_p1p2, deg_U_hp, deg_U_hp_strict,
                      deg_U_p, deg_U_p_strict, evaluate_query, facet_degree,
                      maximal_adjacent_simplices, maximal_simplicial_degree,
                      strict_upper_from_upper)
from .errors import (DimensionError, EmptyDataset, FormatError, InvalidSimplex,
                     IoError, ModeError, NotInComplex, ParamError,
                     SimpdegError)
from .laplacian import (LaplacianTriple, lower_laplacian, multi_laplacian,
                        upper_laplacian, verify_entries)
from .matrix_degrees import (MatrixDegrees, deg_A_p_matrix,
                             deg_A_p_maximal_matrix, deg_L_p_matrix,
                             deg_U_p_matrix)

__version__ = "0.1.0"
