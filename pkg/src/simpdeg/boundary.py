"""Multi-step boundary and coboundary operators on oriented complexes.

The (q, h) boundary operator sends a q-simplex to the signed sum of its
(q-h)-faces; the sign of each face is the parity of the permutation that
moves the h removed positions to the front while preserving the relative
order of everything else.  For h = 1 this is the classical boundary
operator.  Matrices are exact integer sparse matrices with explicit basis
orderings (lexicographic, matching the complex).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np
from scipy import sparse

from .complexes import (OrientedSimplex, Simplex, SimplicialComplex,
                        as_simplex, oriented)
from .errors import DimensionError, IoError, ModeError


def epsilon_sign(removed_positions: Sequence[int], q: int) -> int:
    """Sign of the permutation moving the removed positions to the front.

    ``removed_positions`` must be strictly increasing within ``0..q``.
    The value is ``(-1)**(sum(j_k) - h(h-1)/2)``; removing one position j
    gives the classical alternating sign ``(-1)**j``.
    """
    h = len(removed_positions)
    prev = -1
    for j in removed_positions:
        if j <= prev:
            raise DimensionError(
                f"removed positions must be strictly increasing, got {tuple(removed_positions)}")
        prev = j
    if h and (removed_positions[0] < 0 or removed_positions[-1] > q):
        raise DimensionError(
            f"removed positions {tuple(removed_positions)} outside 0..{q}")
    exponent = sum(removed_positions) - h * (h - 1) // 2
    return -1 if exponent % 2 else 1


def sign_of(tau, sigma) -> int:
    """Coefficient of ``sigma`` in the multi-step boundary of ``tau``.

    Zero when ``sigma`` is not a face of ``tau``; orientation signs of
    both simplices multiply into the result.  Bare tuples are taken in
    canonical (+1) orientation.
    """
    t = oriented(tau)
    s = oriented(sigma)
    sset = set(s.vertices)
    if not sset <= set(t.vertices) or len(s.vertices) > len(t.vertices):
        return 0
    removed = tuple(i for i, v in enumerate(t.vertices) if v not in sset)
    if len(removed) == 0:
        return t.sign * s.sign
    return epsilon_sign(removed, len(t.vertices) - 1) * t.sign * s.sign


def sig_U(si, sj, tau) -> int:
    """Upper sign of two simplices with respect to ``tau``.

    Zero unless ``tau`` contains both; otherwise the product of the two
    boundary coefficients, which does not depend on the orientation of
    ``tau``.
    """
    a, b, t = oriented(si), oriented(sj), oriented(tau)
    union = set(a.vertices) | set(b.vertices)
    if not union <= set(t.vertices):
        return 0
    return sign_of(t, a) * sign_of(t, b)


def sig_L(si, sj, tau) -> int:
    """Lower sign of two simplices with respect to ``tau`` (common face)."""
    a, b, t = oriented(si), oriented(sj), oriented(tau)
    tset = set(t.vertices)
    if not (tset <= set(a.vertices) and tset <= set(b.vertices)):
        return 0
    return sign_of(a, t) * sign_of(b, t)


def odeg_U(K: SimplicialComplex, p: int, si, sj) -> int:
    """Signed count of common upper p-simplices over canonical representatives.

    Summing each unoriented p-simplex once is equivalent to summing both
    orientations and halving, since the sign function is orientation
    invariant in ``tau``.
    """
    a, b = oriented(si), oriented(sj)
    union = tuple(sorted(set(a.vertices) | set(b.vertices)))
    if p > K.dim or p < len(union) - 1 or union not in K:
        return 0
    return sum(sig_U(a, b, tau) for tau in K.cofacets(union, p))


def odeg_L(K: SimplicialComplex, p: int, si, sj) -> int:
    """Signed count of common lower p-faces over canonical representatives."""
    a, b = oriented(si), oriented(sj)
    inter = sorted(set(a.vertices) & set(b.vertices))
    if len(inter) < p + 1:
        return 0
    total = 0
    for tau in combinations(inter, p + 1):
        if tau in K:
            total += sig_L(a, b, tau)
    return total


@dataclass
class Chain:
    """Integer linear combination of same-dimension stored simplices."""

    q: int
    coefficients: dict[Simplex, int] = field(default_factory=dict)

    def validate(self, K: SimplicialComplex) -> "Chain":
        for s in self.coefficients:
            if len(s) - 1 != self.q:
                raise DimensionError(f"{s} is not {self.q}-dimensional")
            if s not in K:
                raise DimensionError(f"{s} is not stored in the complex")
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        trim = lambda c: {k: v for k, v in c.items() if v != 0}
        return self.q == other.q and trim(self.coefficients) == trim(other.coefficients)


class SparseIntMatrix:
    """Exact integer sparse matrix with simplex-labelled bases.

    Backed by a CSR matrix with int64 entries; the row and column bases
    record which simplex each index refers to, so transposes and products
    keep their interpretation.
    """

    def __init__(self, mat: sparse.spmatrix, row_basis: Sequence[Simplex],
                 col_basis: Sequence[Simplex]):
        self._csr = sparse.csr_matrix(mat, dtype=np.int64)
        self._csr.sum_duplicates()
        self._csr.eliminate_zeros()
        self._csr.sort_indices()
        self.row_basis: tuple[Simplex, ...] = tuple(row_basis)
        self.col_basis: tuple[Simplex, ...] = tuple(col_basis)
        if self._csr.shape != (len(self.row_basis), len(self.col_basis)):
            raise ValueError("basis lengths do not match matrix shape")

    # -- construction helpers ------------------------------------------

    @classmethod
    def from_triplets(cls, nrows: int, ncols: int,
                      triplets: Sequence[tuple[int, int, int]],
                      row_basis: Sequence[Simplex],
                      col_basis: Sequence[Simplex]) -> "SparseIntMatrix":
        if triplets:
            rows, cols, vals = zip(*triplets)
        else:
            rows, cols, vals = (), (), ()
        mat = sparse.coo_matrix((vals, (rows, cols)), shape=(nrows, ncols), dtype=np.int64)
        return cls(mat, row_basis, col_basis)

    @classmethod
    def zeros(cls, row_basis: Sequence[Simplex], col_basis: Sequence[Simplex]) -> "SparseIntMatrix":
        mat = sparse.csr_matrix((len(row_basis), len(col_basis)), dtype=np.int64)
        return cls(mat, row_basis, col_basis)

    # -- views -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._csr.shape

    @property
    def nnz(self) -> int:
        return self._csr.nnz

    def entry(self, i: int, j: int) -> int:
        return int(self._csr[i, j])

    def at(self, row_simplex, col_simplex) -> int:
        i = self.row_basis.index(as_simplex(row_simplex))
        j = self.col_basis.index(as_simplex(col_simplex))
        return self.entry(i, j)

    def to_dense(self) -> np.ndarray:
        return np.asarray(self._csr.todense(), dtype=np.int64)

    def tocsr(self) -> sparse.csr_matrix:
        return self._csr.copy()

    def triplets(self) -> list[tuple[int, int, int]]:
        """Nonzero entries as (row, col, value), sorted row-major."""
        coo = self._csr.tocoo()
        items = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
        return [(int(r), int(c), int(v)) for r, c, v in items]

    # -- algebra ----------------------------------------------------------

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self._csr.transpose().tocsr(), self.col_basis, self.row_basis)

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.col_basis != other.row_basis:
            raise ValueError("basis mismatch in matrix product")
        return SparseIntMatrix(self._csr @ other._csr, self.row_basis, other.col_basis)

    def __add__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.row_basis != other.row_basis or self.col_basis != other.col_basis:
            raise ValueError("basis mismatch in matrix sum")
        return SparseIntMatrix(self._csr + other._csr, self.row_basis, self.col_basis)

    def abs(self) -> "SparseIntMatrix":
        m = self._csr.copy()
        m.data = np.abs(m.data)
        return SparseIntMatrix(m, self.row_basis, self.col_basis)

    def scale_rows(self, signs: Mapping[Simplex, int]) -> "SparseIntMatrix":
        d = np.array([signs.get(s, 1) for s in self.row_basis], dtype=np.int64)
        return SparseIntMatrix(sparse.diags(d, dtype=np.int64) @ self._csr,
                               self.row_basis, self.col_basis)

    def scale_cols(self, signs: Mapping[Simplex, int]) -> "SparseIntMatrix":
        d = np.array([signs.get(s, 1) for s in self.col_basis], dtype=np.int64)
        return SparseIntMatrix(self._csr @ sparse.diags(d, dtype=np.int64),
                               self.row_basis, self.col_basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.row_basis == other.row_basis
                and self.col_basis == other.col_basis
                and (self._csr != other._csr).nnz == 0)

    def equal_entries(self, dense: np.ndarray) -> bool:
        return bool(np.array_equal(self.to_dense(), np.asarray(dense, dtype=np.int64)))

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.shape[0]}x{self.shape[1]}, nnz={self.nnz})"

    # -- export ------------------------------------------------------------

    def export_text(self, name: str, params: Mapping[str, int],
                    labels: Mapping[int, int] | None = None) -> str:
        """Deterministic coordinate-triplet text with named bases.

        ``labels`` optionally translates vertex ids in the basis header
        back to dataset-native labels.
        """
        def fmt(s: Simplex) -> str:
            vs = [labels[v] for v in s] if labels is not None else list(s)
            return ",".join(map(str, vs))

        out = io.StringIO()
        out.write("# simpdeg sparse integer matrix\n")
        out.write(f"# name: {name}\n")
        out.write("# params: " + " ".join(f"{k}={v}" for k, v in params.items()) + "\n")
        rdim = len(self.row_basis[0]) - 1 if self.row_basis else -1
        cdim = len(self.col_basis[0]) - 1 if self.col_basis else -1
        out.write(f"# row-basis (dim {rdim}): " + " ".join(fmt(s) for s in self.row_basis) + "\n")
        out.write(f"# col-basis (dim {cdim}): " + " ".join(fmt(s) for s in self.col_basis) + "\n")
        trips = self.triplets()
        out.write(f"{self.shape[0]} {self.shape[1]} {len(trips)}\n")
        for r, c, v in trips:
            out.write(f"{r} {c} {v}\n")
        return out.getvalue()

    def write_text(self, path, name: str, params: Mapping[str, int],
                   labels: Mapping[int, int] | None = None) -> None:
        text = self.export_text(name, params, labels)
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc}") from exc


def _require_closed(K: SimplicialComplex, what: str) -> None:
    if K.mode != "closed":
        raise ModeError(f"{what} requires a closed-mode complex (faces must be stored)")


def boundary_matrix(K: SimplicialComplex, q: int, h: int,
                    orientation: Mapping[Simplex, int] | None = None) -> SparseIntMatrix:
    """Matrix of the (q, h) boundary operator, columns over the q-basis.

    Each column carries exactly ``C(q+1, h)`` signed unit entries, one per
    (q-h)-face.  ``orientation`` optionally flips basis simplices away
    from the canonical (+1) orientation.
    """
    _require_closed(K, "boundary_matrix")
    if q < 0 or q > K.dim:
        raise DimensionError(f"q={q} outside 0..{K.dim}")
    if h < 0 or h > q:
        raise DimensionError(f"h={h} outside 0..{q}")
    rows = K.simplices(q - h)
    cols = K.simplices(q)
    row_idx = {s: i for i, s in enumerate(rows)}
    triplets: list[tuple[int, int, int]] = []
    for j, s in enumerate(cols):
        for removed in combinations(range(q + 1), h):
            kept = tuple(s[i] for i in range(q + 1) if i not in removed)
            triplets.append((row_idx[kept], j, epsilon_sign(removed, q)))
    mat = SparseIntMatrix.from_triplets(len(rows), len(cols), triplets, rows, cols)
    if orientation:
        mat = mat.scale_rows(orientation).scale_cols(orientation)
    return mat


def coboundary_matrix(K: SimplicialComplex, q: int, h: int,
                      orientation: Mapping[Simplex, int] | None = None) -> SparseIntMatrix:
    """Adjoint of the (q, h) boundary operator: the transposed matrix."""
    return boundary_matrix(K, q, h, orientation).transpose()


def boundary_of(K: SimplicialComplex, chain: Chain | OrientedSimplex | Simplex, h: int) -> Chain:
    """Apply the multi-step boundary operator to a chain or single simplex."""
    _require_closed(K, "boundary_of")
    if isinstance(chain, Chain):
        chain.validate(K)
        q = chain.q
        coeffs = dict(chain.coefficients)
    else:
        s = oriented(chain)
        q = s.dim
        coeffs = {s.vertices: s.sign}
    if h < 0 or h > q:
        raise DimensionError(f"h={h} outside 0..{q}")
    out: dict[Simplex, int] = {}
    for s, c in coeffs.items():
        if c == 0:
            continue
        for removed in combinations(range(q + 1), h):
            kept = tuple(s[i] for i in range(q + 1) if i not in removed)
            out[kept] = out.get(kept, 0) + c * epsilon_sign(removed, q)
    return Chain(q - h, {s: v for s, v in out.items() if v != 0})
