"""Canonical representation of finite simplicial complexes.

Simplices are plain tuples of integer vertex ids in strictly increasing
order; that tuple is the universal key for every set operation in the
package.  A complex stores its generating simplices, its facets (the
maximal generators under inclusion) and, per dimension, a lazily
materialized lexicographically sorted basis.

Two storage modes exist:

* ``closed``   -- the complex logically contains every face of every
  generator.  Faces are enumerated per dimension on demand; the full
  closure is never materialized globally.
* ``explicit`` -- only the deduplicated generators are stored.  This mode
  exists for dataset statistics where only reported simplices count.
"""

from __future__ import annotations

import bisect
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, InvalidSimplex, NotInComplex

Simplex = tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate a vertex collection and return it as a sorted tuple.

    Raises :class:`InvalidSimplex` on an empty collection or duplicate
    vertices.  Vertex order in the input is irrelevant here; orientation
    is handled separately by :func:`canonical_form`.
    """
    vs = tuple(sorted(vertices))
    if not vs:
        raise InvalidSimplex("a simplex needs at least one vertex")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise InvalidSimplex(f"duplicate vertex {a!r}")
    if not all(isinstance(v, int) and v >= 0 for v in vs):
        raise InvalidSimplex(f"vertices must be non-negative integers, got {vs!r}")
    return vs


def simplex_dim(s: Simplex) -> int:
    return len(s) - 1


class OrientedSimplex:
    """A simplex together with a sign relative to its canonical order.

    ``(vertices, +1)`` is the canonical orientation (ascending vertex
    order); any other vertex ordering reduces to the canonical tuple and
    the parity of the sorting permutation.
    """

    __slots__ = ("vertices", "sign")

    def __init__(self, vertices: Iterable[int], sign: int = 1):
        self.vertices = as_simplex(vertices)
        if sign not in (1, -1):
            raise InvalidSimplex(f"orientation sign must be +1 or -1, got {sign!r}")
        self.sign = sign

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def flipped(self) -> "OrientedSimplex":
        return OrientedSimplex(self.vertices, -self.sign)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedSimplex)
            and self.vertices == other.vertices
            and self.sign == other.sign
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.sign))

    def __repr__(self) -> str:
        pre = "-" if self.sign < 0 else "+"
        return f"{pre}[{','.join(map(str, self.vertices))}]"


def canonical_form(vertex_list: Sequence[int]) -> OrientedSimplex:
    """Sort a vertex list and track the parity of the sorting permutation.

    ``[1, 0, 2]`` sorts with one transposition, so it maps to
    ``((0, 1, 2), -1)``.
    """
    if len(vertex_list) == 0:
        raise InvalidSimplex("a simplex needs at least one vertex")
    if len(set(vertex_list)) != len(vertex_list):
        raise InvalidSimplex(f"duplicate vertex in {vertex_list!r}")
    order = sorted(range(len(vertex_list)), key=lambda i: vertex_list[i])
    # parity of the permutation via cycle decomposition
    seen = [False] * len(order)
    sign = 1
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return OrientedSimplex(tuple(vertex_list[i] for i in order), sign)


def oriented(s) -> OrientedSimplex:
    """Coerce a bare vertex tuple (canonical orientation) or pass through."""
    if isinstance(s, OrientedSimplex):
        return s
    return OrientedSimplex(as_simplex(s), 1)


def faces(s: Iterable[int], p: int) -> list[Simplex]:
    """All p-dimensional faces of a simplex, in lexicographic order."""
    vs = as_simplex(s)
    if p < 0 or p > len(vs) - 1:
        raise DimensionError(f"no {p}-faces in a {len(vs) - 1}-simplex")
    return list(combinations(vs, p + 1))


def is_face(t: Iterable[int], s: Iterable[int]) -> bool:
    """Subset test on vertex tuples."""
    return set(as_simplex(t)) <= set(as_simplex(s))


def _maximal_elements(simplices: Sequence[Simplex]) -> list[Simplex]:
    """Maximal elements under inclusion, scanned largest-first.

    Containment is tested only against already accepted supersets that
    share the candidate's least frequent vertex.
    """
    freq: dict[int, int] = {}
    for s in simplices:
        for v in s:
            freq[v] = freq.get(v, 0) + 1
    accepted: list[Simplex] = []
    accepted_sets: list[frozenset[int]] = []
    by_vertex: dict[int, list[int]] = {}
    for s in sorted(set(simplices), key=lambda t: (-len(t), t)):
        rare = min(s, key=lambda v: freq[v])
        sset = set(s)
        if any(sset <= accepted_sets[i] for i in by_vertex.get(rare, ())):
            continue
        idx = len(accepted)
        accepted.append(s)
        accepted_sets.append(frozenset(s))
        for v in s:
            by_vertex.setdefault(v, []).append(idx)
    return accepted


class SimplicialComplex:
    """Immutable indexed store of simplices by dimension.

    Build instances through :func:`build_complex`.  After construction all
    queries are pure reads, safe for unrestricted concurrent access.
    Vertex labels are remapped to dense ids ``0..n-1`` (identity when the
    input already uses them); the remap table is retained.
    """

    def __init__(self, generators: Sequence[Simplex], mode: str,
                 vertex_labels: Sequence[int]):
        if mode not in ("closed", "explicit"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.vertex_labels: tuple[int, ...] = tuple(vertex_labels)
        self._id_of: dict[int, int] = {lab: i for i, lab in enumerate(self.vertex_labels)}
        self.generators: tuple[Simplex, ...] = tuple(sorted(set(generators), key=lambda s: (len(s), s)))
        self.facets_list: tuple[Simplex, ...] = tuple(sorted(_maximal_elements(self.generators)))
        self._facet_sets: tuple[frozenset[int], ...] = tuple(frozenset(f) for f in self.facets_list)
        self._facet_index: dict[Simplex, int] = {f: i for i, f in enumerate(self.facets_list)}
        self._vertex_to_facets: dict[int, frozenset[int]] = {}
        acc: dict[int, set[int]] = {}
        for i, f in enumerate(self.facets_list):
            for v in f:
                acc.setdefault(v, set()).add(i)
        self._vertex_to_facets = {v: frozenset(ids) for v, ids in acc.items()}
        self._explicit_set: frozenset[Simplex] = frozenset(self.generators)
        self._vertex_to_generators: dict[int, tuple[int, ...]] | None = None
        self._dim_cache: dict[int, tuple[Simplex, ...]] = {}

    # -- vertex label translation ------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    def label(self, vertex_id: int) -> int:
        return self.vertex_labels[vertex_id]

    def vertex_id(self, label: int) -> int:
        return self._id_of[label]

    def labels(self, s: Iterable[int]) -> tuple[int, ...]:
        """Translate an id-space simplex back to original labels."""
        return tuple(self.vertex_labels[v] for v in s)

    # -- basic structure ----------------------------------------------

    @property
    def dim(self) -> int:
        if not self.generators:
            return -1
        return max(len(f) for f in self.facets_list) - 1

    def facets(self) -> list[Simplex]:
        return list(self.facets_list)

    def is_facet(self, s: Iterable[int]) -> bool:
        t = as_simplex(s)
        if t not in self:
            raise NotInComplex(f"{t} is not stored in the complex")
        return t in self._facet_index

    def facet_ids_containing(self, s: Iterable[int]) -> frozenset[int]:
        """Ids (into ``facets_list``) of every facet containing ``s``.

        Intersects the per-vertex facet sets smallest-first with early
        exit, so queries stay cheap on heavy vertices.
        """
        t = as_simplex(s)
        per_vertex = []
        for v in t:
            ids = self._vertex_to_facets.get(v)
            if not ids:
                return frozenset()
            per_vertex.append(ids)
        per_vertex.sort(key=len)
        out = per_vertex[0]
        for ids in per_vertex[1:]:
            out = out & ids
            if not out:
                return frozenset()
        return out

    def facet_set(self, facet_id: int) -> frozenset[int]:
        return self._facet_sets[facet_id]

    def __contains__(self, s) -> bool:
        try:
            t = as_simplex(s)
        except InvalidSimplex:
            return False
        if self.mode == "explicit":
            return t in self._explicit_set
        return bool(self.facet_ids_containing(t))

    def simplices(self, q: int) -> tuple[Simplex, ...]:
        """Lexicographically sorted basis of the q-dimensional chain group.

        Materialized on first request and cached; in closed mode this
        enumerates the (q+1)-subsets of every facet.
        """
        if q < 0 or q > self.dim:
            return ()
        cached = self._dim_cache.get(q)
        if cached is not None:
            return cached
        if self.mode == "explicit":
            basis = tuple(s for s in self.generators if len(s) == q + 1)
            basis = tuple(sorted(basis))
        else:
            seen: set[Simplex] = set()
            for f in self.facets_list:
                if len(f) >= q + 1:
                    seen.update(combinations(f, q + 1))
            basis = tuple(sorted(seen))
        self._dim_cache[q] = basis
        return basis

    def index_of(self, s: Iterable[int]) -> int:
        """Position of a simplex in the basis of its dimension."""
        t = as_simplex(s)
        basis = self.simplices(len(t) - 1)
        i = bisect.bisect_left(basis, t)
        if i < len(basis) and basis[i] == t:
            return i
        raise NotInComplex(f"{t} is not stored in the complex")

    def f_vector(self) -> tuple[int, ...]:
        """Per-dimension simplex counts (materializes every dimension)."""
        d = self.dim
        if d < 0:
            return ()
        return tuple(len(self.simplices(q)) for q in range(d + 1))

    def iter_simplices(self) -> Iterator[Simplex]:
        for q in range(self.dim + 1):
            yield from self.simplices(q)

    # -- star / cofacet queries ----------------------------------------

    def cofacets(self, s: Iterable[int], q_prime: int) -> list[Simplex]:
        """All stored ``q_prime``-simplices containing ``s`` as a face.

        Empty when ``q_prime`` exceeds the complex dimension; a simplex is
        a cofacet of itself at its own dimension.
        """
        t = as_simplex(s)
        if t not in self:
            raise NotInComplex(f"{t} is not stored in the complex")
        if q_prime < len(t) - 1:
            raise DimensionError(
                f"cofacet dimension {q_prime} below simplex dimension {len(t) - 1}")
        if q_prime > self.dim:
            return []
        k = q_prime + 1 - len(t)
        tset = set(t)
        if self.mode == "explicit":
            return [u for u in self.simplices(q_prime) if tset <= set(u)]
        out: set[Simplex] = set()
        for fid in self.facet_ids_containing(t):
            rest = sorted(self._facet_sets[fid] - tset)
            for extra in combinations(rest, k):
                out.add(tuple(sorted(t + extra)))
        return sorted(out)

    def __repr__(self) -> str:
        return (f"SimplicialComplex(mode={self.mode!r}, vertices={self.n_vertices}, "
                f"facets={len(self.facets_list)}, dim={self.dim})")


def build_complex(simplex_list: Iterable[Iterable[int]], mode: str = "closed") -> SimplicialComplex:
    """Build a complex from vertex collections, remapping labels to dense ids.

    In ``closed`` mode the stored set is the union of all faces of the
    inputs (enumerated lazily); in ``explicit`` mode it is the
    deduplicated input set only.  Basis orderings are deterministic
    regardless of input order.
    """
    raw = [as_simplex(s) for s in simplex_list]
    labels = sorted({v for s in raw for v in s})
    ident = labels == list(range(len(labels)))
    if ident:
        gens = raw
    else:
        to_id = {lab: i for i, lab in enumerate(labels)}
        gens = [tuple(to_id[v] for v in s) for s in raw]
    return SimplicialComplex(gens, mode, labels)
