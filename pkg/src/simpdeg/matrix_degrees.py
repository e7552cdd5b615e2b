"""Degree computation through absolute boundary-matrix products.

Independent verification route for the combinatorial degree functions:
counts are recovered from the sparsity structure of products of
``|B(q, h)|`` matrices.  A partner simplex is detected through a nonzero
"order" (number of shared faces or joint cofaces), clamped to one so
nobody is counted twice, with the target's own appearance subtracted.

This path materializes boundary matrices, so it is gated to small
complexes (``max_matrix_simplices`` per dimension).
"""

from __future__ import annotations

import numpy as np
from scipy import sparse

from .boundary import boundary_matrix
from .complexes import SimplicialComplex, as_simplex
from .errors import DimensionError, ModeError

__all__ = [
    "MatrixDegrees",
    "deg_L_p_matrix",
    "deg_U_p_matrix",
    "deg_A_p_matrix",
    "deg_A_p_maximal_matrix",
]

DEFAULT_MATRIX_CAP = 5000


class MatrixDegrees:
    """Cached absolute boundary matrices for one complex."""

    def __init__(self, K: SimplicialComplex, max_matrix_simplices: int = DEFAULT_MATRIX_CAP):
        if K.mode != "closed":
            raise ModeError("matrix-formula degrees require a closed-mode complex")
        self.K = K
        self.cap = max_matrix_simplices
        self._abs: dict[tuple[int, int], sparse.csr_matrix] = {}
        self._blocks: dict[tuple[str, int, int, int], sparse.csr_matrix] = {}

    def abs_boundary(self, q: int, h: int) -> sparse.csr_matrix:
        """|B(q, h)| as csr; rows over the (q-h)-basis, columns over q."""
        key = (q, h)
        got = self._abs.get(key)
        if got is None:
            n = len(self.K.simplices(q))
            if n > self.cap:
                raise DimensionError(
                    f"dimension {q} holds {n} simplices, above the matrix cap {self.cap}")
            got = boundary_matrix(self.K, q, h).abs().tocsr()
            self._abs[key] = got
        return got

    # -- indicator blocks ------------------------------------------------

    def lower_order_block(self, q: int, q2: int, p: int) -> sparse.csr_matrix:
        """(n_q x n_q2) matrix of shared-p-face counts between dimensions."""
        key = ("L", q, q2, p)
        got = self._blocks.get(key)
        if got is not None:
            return got
        if p > min(q, q2) or p < 0:
            got = sparse.csr_matrix((len(self.K.simplices(q)), len(self.K.simplices(q2))),
                                    dtype=np.int64)
        else:
            a = self.abs_boundary(q, q - p)
            b = self.abs_boundary(q2, q2 - p)
            got = (a.T @ b).tocsr()
        self._blocks[key] = got
        return got

    def upper_order_block(self, q: int, q2: int, p: int) -> sparse.csr_matrix:
        """(n_q x n_q2) matrix of joint-p-coface counts between dimensions."""
        key = ("U", q, q2, p)
        got = self._blocks.get(key)
        if got is not None:
            return got
        shape = (len(self.K.simplices(q)), len(self.K.simplices(q2)))
        if p < max(q, q2) or p > self.K.dim:
            got = sparse.csr_matrix(shape, dtype=np.int64)
        else:
            a = self.abs_boundary(p, p - q)   # rows: q-basis, cols: p-basis
            b = self.abs_boundary(p, p - q2)
            got = (a @ b.T).tocsr()
        self._blocks[key] = got
        return got

    @staticmethod
    def _clamp(m: sparse.spmatrix) -> sparse.csr_matrix:
        out = m.tocsr().copy()
        out.data = np.minimum(out.data, 1)
        out.eliminate_zeros()
        return out

    def adj_block(self, q: int, q2: int, p: int) -> sparse.csr_matrix:
        """Adjacency indicators between the q- and q2-bases at level p.

        ``m_L(p) * (1 - m_L(p+1)) * (1 - m_U(p'))`` entrywise, with
        ``p' = q + q2 - p``.
        """
        key = ("A", q, q2, p)
        got = self._blocks.get(key)
        if got is not None:
            return got
        mlp = self._clamp(self.lower_order_block(q, q2, p))
        mlp1 = self._clamp(self.lower_order_block(q, q2, p + 1))
        mup = self._clamp(self.upper_order_block(q, q2, q + q2 - p))
        # work on the sparse support of m_L(p): the two (1 - x) factors
        # only ever remove entries
        out = mlp.tolil()
        rows, cols = mlp.nonzero()
        for r, c in zip(rows.tolist(), cols.tolist()):
            if mlp1[r, c] or mup[r, c]:
                out[r, c] = 0
        got = self._clamp(out)
        self._blocks[key] = got
        return got

    # -- degree formulas --------------------------------------------------

    def lower_degree(self, s, p: int) -> int:
        """Partner count over all dimensions sharing a p-face; self removed."""
        s = as_simplex(s)
        q = len(s) - 1
        j = self.K.index_of(s)
        if p < 0 or p > q:
            return 0
        total = 0
        for q2 in range(p, self.K.dim + 1):
            block = self.lower_order_block(q, q2, p)
            row = block.getrow(j)
            total += row.nnz  # min(1, order) summed over the q2-basis
        return total - 1  # the simplex shares every p-face with itself

    def upper_degree(self, s, p: int) -> int:
        """Partner count over all dimensions with a joint p-coface.

        The self term is subtracted only when present: a simplex with no
        p-coface never entered its own sum.
        """
        s = as_simplex(s)
        q = len(s) - 1
        j = self.K.index_of(s)
        if p > self.K.dim or p < q:
            return 0
        total = 0
        self_term = 0
        for q2 in range(0, p + 1):
            block = self.upper_order_block(q, q2, p)
            row = block.getrow(j)
            total += row.nnz
            if q2 == q:
                self_term = 1 if block[j, j] else 0
        return total - self_term

    def adjacency_degree(self, s, p: int) -> int:
        s = as_simplex(s)
        q = len(s) - 1
        j = self.K.index_of(s)
        if p < 0 or p > q:
            return 0
        total = 0
        for q2 in range(p, self.K.dim + 1):
            total += self.adj_block(q, q2, p).getrow(j).nnz
        return total

    def adjacency_degree_maximal(self, s, p: int) -> int:
        """Maximal variant: subtract partners nested in larger adjacent ones.

        A partner at dimension q2 is discounted when some higher-dimensional
        simplex containing it is itself adjacent; containment indicators are
        absolute boundary entries.
        """
        s = as_simplex(s)
        q = len(s) - 1
        j = self.K.index_of(s)
        if p < 0 or p > q:
            return 0
        plain = 0
        nested = 0
        adj_rows = {q2: self.adj_block(q, q2, p).getrow(j).toarray().ravel()
                    for q2 in range(p, self.K.dim + 1)}
        for q2 in range(p, self.K.dim + 1):
            arow = adj_rows[q2]
            plain += int(np.count_nonzero(arow))
            if not arow.any():
                continue
            covered = np.zeros_like(arow)
            for q3 in range(q2 + 1, self.K.dim + 1):
                contain = self.abs_boundary(q3, q3 - q2)  # rows q2, cols q3
                covered = covered + contain @ adj_rows.get(q3, np.zeros(contain.shape[1], dtype=np.int64))
            nested += int(np.count_nonzero(np.minimum(covered, 1) * arow))
        return plain - nested


def deg_L_p_matrix(K: SimplicialComplex, s, p: int,
                   calc: MatrixDegrees | None = None) -> int:
    return (calc or MatrixDegrees(K)).lower_degree(s, p)


def deg_U_p_matrix(K: SimplicialComplex, s, p: int,
                   calc: MatrixDegrees | None = None) -> int:
    return (calc or MatrixDegrees(K)).upper_degree(s, p)


def deg_A_p_matrix(K: SimplicialComplex, s, p: int,
                   calc: MatrixDegrees | None = None) -> int:
    return (calc or MatrixDegrees(K)).adjacency_degree(s, p)


def deg_A_p_maximal_matrix(K: SimplicialComplex, s, p: int,
                           calc: MatrixDegrees | None = None) -> int:
    return (calc or MatrixDegrees(K)).adjacency_degree_maximal(s, p)
