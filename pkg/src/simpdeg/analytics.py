"""Dataset-level degree statistics and distributions.

Reproduces the summary-table quantities: facet size statistics, classical
node and node-to-facets degrees, and the per-dimension maximal upper and
maximal simplicial degree statistics, each with its degree distribution.

Two conventions are switchable and always recorded in the output:

* ``edge_mode`` for the classical degree: ``closure`` counts distinct
  co-members across all reported simplices (the 1-skeleton of the
  closure); ``explicit`` counts only unordered distinct 2-node simplices.
* ``enumeration`` for per-dimension statistics: ``closure`` walks every
  q-face of the facets, ``explicit`` only reported q-simplices.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .analytics_util import lower_median, round2, smallest_mode
from .complexes import Simplex, SimplicialComplex
from .degrees import facet_degree, maximal_adjacent_simplices
from .errors import DimensionError, EmptyDataset

__all__ = [
    "FacetSizeStats", "DegreeStats", "DegreeDistribution",
    "facet_size_stats", "classical_degree_stats", "simplicial_degree_stats",
    "degree_distribution", "closure_simplices", "closed_view",
]


@dataclass
class FacetSizeStats:
    max_s: int
    mean_s: float
    median_s: int
    mode_s: int

    def to_json_dict(self) -> dict:
        return {"max_s": self.max_s, "mean_s": self.mean_s,
                "median_s": self.median_s, "mode_s": self.mode_s}


@dataclass
class DegreeStats:
    kind: str
    q: int | None
    max: int
    mean: float
    median: int
    population: int
    mode_note: str

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind, "max": self.max, "mean": self.mean,
               "median": self.median, "population": self.population,
               "mode": self.mode_note}
        if self.q is not None:
            out["q"] = self.q
        return out


@dataclass
class DegreeDistribution:
    """Histogram and its normalization over the evaluated population."""

    histogram: dict[int, int]
    normalized: dict[int, float]

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "DegreeDistribution":
        if not values:
            raise EmptyDataset("distribution of an empty population")
        hist: dict[int, int] = {}
        for v in values:
            hist[v] = hist.get(v, 0) + 1
        total = len(values)
        hist = dict(sorted(hist.items()))
        return cls(hist, {k: c / total for k, c in hist.items()})

    def support(self) -> list[int]:
        return [k for k, c in self.histogram.items() if c]

    def stats(self, kind: str, q: int | None, mode_note: str) -> DegreeStats:
        values = [k for k, c in self.histogram.items() for _ in range(c)]
        return _stats_from_values(values, kind, q, mode_note)


def _stats_from_values(values: Sequence[int], kind: str, q: int | None,
                       mode_note: str) -> DegreeStats:
    if not values:
        raise EmptyDataset(f"no population for {kind}")
    return DegreeStats(kind=kind, q=q, max=max(values),
                       mean=round2(sum(values) / len(values)),
                       median=lower_median(values),
                       population=len(values), mode_note=mode_note)


def facet_size_stats(facets: Sequence[Simplex]) -> FacetSizeStats:
    """Size statistics over the facet list (size = vertex count)."""
    if not facets:
        raise EmptyDataset("facet size statistics need at least one facet")
    sizes = [len(f) for f in facets]
    return FacetSizeStats(max_s=max(sizes), mean_s=round2(sum(sizes) / len(sizes)),
                          median_s=lower_median(sizes), mode_s=smallest_mode(sizes))


# ---------------------------------------------------------------------------
# populations
# ---------------------------------------------------------------------------

def closed_view(K: SimplicialComplex) -> SimplicialComplex:
    """The closed complex over the same generators (identity when closed).

    The vertex label table carries over so reports keep dataset-native
    labels.
    """
    if K.mode == "closed":
        return K
    return SimplicialComplex(K.generators, "closed", K.vertex_labels)


def closure_simplices(K: SimplicialComplex, q: int) -> tuple[Simplex, ...]:
    """All q-faces of the facets, regardless of the complex's storage mode."""
    seen: set[Simplex] = set()
    for f in K.facets_list:
        if len(f) >= q + 1:
            seen.update(combinations(f, q + 1))
    return tuple(sorted(seen))


def _population(K: SimplicialComplex, q: int, enumeration: str) -> tuple[Simplex, ...]:
    if q < 0 or q > K.dim:
        raise DimensionError(f"q={q} outside 0..{K.dim}")
    if enumeration == "closure":
        return closure_simplices(K, q)
    if enumeration == "explicit":
        return tuple(sorted(s for s in K.generators if len(s) == q + 1))
    raise ValueError(f"unknown enumeration {enumeration!r}")


# ---------------------------------------------------------------------------
# classical node degrees
# ---------------------------------------------------------------------------

def _classical_degree_values(K: SimplicialComplex, edge_mode: str) -> list[int]:
    n = K.n_vertices
    if edge_mode == "explicit":
        deg = [0] * n
        for s in K.generators:
            if len(s) == 2:
                deg[s[0]] += 1
                deg[s[1]] += 1
        return deg
    if edge_mode == "closure":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for f in K.facets_list:
            for v in f:
                nbrs[v].update(f)
        return [len(ns) - 1 if ns else 0 for ns in nbrs]
    raise ValueError(f"unknown edge_mode {edge_mode!r}")


def _node_to_facets_values(K: SimplicialComplex) -> list[int]:
    return [len(K._vertex_to_facets.get(v, ())) for v in range(K.n_vertices)]


def classical_degree_stats(K: SimplicialComplex, edge_mode: str = "closure") \
        -> tuple[DegreeStats, DegreeStats]:
    """Classical degree and node-to-facets degree over every node.

    Zero-degree nodes stay in the population.  The edge-counting mode is
    embedded in the result so outputs are self-describing.
    """
    k_values = _classical_degree_values(K, edge_mode)
    kf_values = _node_to_facets_values(K)
    return (_stats_from_values(k_values, "classical_k", None, f"edges={edge_mode}"),
            _stats_from_values(kf_values, "node_to_facets_kF", None, "facets"))


# ---------------------------------------------------------------------------
# per-dimension simplicial degrees
# ---------------------------------------------------------------------------

_POOL_STATE: dict = {}


def _pool_init(K, kind, include_self):
    _POOL_STATE["K"] = K
    _POOL_STATE["kind"] = kind
    _POOL_STATE["include_self"] = include_self


def _pool_eval(chunk: Sequence[Simplex]) -> list[int]:
    K = _POOL_STATE["K"]
    kind = _POOL_STATE["kind"]
    include_self = _POOL_STATE["include_self"]
    return [_degree_value(K, s, kind, include_self) for s in chunk]


def _degree_value(K: SimplicialComplex, s: Simplex, kind: str, include_self: bool) -> int:
    if kind == "kU_star":
        return facet_degree(K, s, include_self=include_self)
    if kind == "k_star":
        return len(maximal_adjacent_simplices(K, s, None)) \
            + facet_degree(K, s, include_self=include_self)
    raise ValueError(f"unknown kind {kind!r}")


def _degree_values(K: SimplicialComplex, q: int, kind: str, enumeration: str,
                   include_self: bool, threads: int) -> list[int]:
    KC = closed_view(K)
    population = _population(KC, q, enumeration)
    if not population:
        raise EmptyDataset(f"no {q}-simplices under {enumeration} enumeration")
    if threads <= 1 or len(population) < 64:
        return [_degree_value(KC, s, kind, include_self) for s in population]
    chunk = max(32, len(population) // (threads * 8))
    chunks = [population[i:i + chunk] for i in range(0, len(population), chunk)]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(threads, initializer=_pool_init, initargs=(KC, kind, include_self)) as pool:
        parts = pool.map(_pool_eval, chunks)
    return [v for part in parts for v in part]


def simplicial_degree_stats(K: SimplicialComplex, q: int, kind: str,
                            enumeration: str = "closure",
                            include_self: bool = True,
                            threads: int = 1) -> DegreeStats:
    """Max, mean and median of a per-dimension simplicial degree.

    ``kind`` is ``kU_star`` (facets the simplex is nested in) or
    ``k_star`` (those facets plus the maximal communities adjacent to its
    strict faces).  The enumeration that produced the population is
    recorded in the output.
    """
    values = _degree_values(K, q, kind, enumeration, include_self, threads)
    return _stats_from_values(values, kind, q, f"enumeration={enumeration}")


def degree_distribution(K: SimplicialComplex, kind: str, q: int | None = None,
                        enumeration: str = "closure", edge_mode: str = "closure",
                        include_self: bool = True, threads: int = 1) -> DegreeDistribution:
    """Histogram over the same population the stats operations use."""
    if kind == "classical_k":
        values: Sequence[int] = _classical_degree_values(K, edge_mode)
    elif kind == "node_to_facets_kF":
        values = _node_to_facets_values(K)
    elif kind in ("kU_star", "k_star"):
        if q is None:
            raise DimensionError(f"{kind} needs a dimension q")
        values = _degree_values(K, q, kind, enumeration, include_self, threads)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return DegreeDistribution.from_values(list(values))
