"""Higher-order adjacency degrees for simplices of any dimensions.

Two simplices are p-lower adjacent when they share a common p-face and
p-upper adjacent when some stored p-simplex contains both.  Strict
variants forbid the relation one dimension higher.  On a closed complex
these reduce to set arithmetic:

* p-lower adjacent        <=>  ``|s & t| >= p+1``
* strictly p-lower        <=>  ``|s & t| == p+1``
* p-upper adjacent        <=>  ``|s | t| <= p+1`` and some facet of size
  at least ``p+1`` contains the union.

A simplex is never counted as adjacent to itself.  Everything here is a
pure function of an immutable complex; batch evaluation over many target
simplices is embarrassingly parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Sequence

from .complexes import Simplex, SimplicialComplex, as_simplex
from .errors import DimensionError, ModeError, NotInComplex, ParamError

__all__ = [
    "deg_L_hp", "deg_L_hp_strict", "deg_L_p", "deg_L_p_strict",
    "deg_U_hp", "deg_U_hp_strict", "deg_U_p", "deg_U_p_strict",
    "strict_upper_from_upper", "facet_degree", "adj_p",
    "deg_A_p", "deg_A_p_maximal", "maximal_adjacent_simplices",
    "deg_p1p2", "maximal_simplicial_degree",
    "DegreeKind", "DegreeQuery", "DegreeResult", "evaluate_query",
]


def _require_closed(K: SimplicialComplex, what: str) -> None:
    if K.mode != "closed":
        raise ModeError(f"{what} requires a closed-mode complex")


def _require_stored(K: SimplicialComplex, s: Simplex) -> None:
    if s not in K:
        raise NotInComplex(f"{s} is not stored in the complex")


def _max_common_facet_size(K: SimplicialComplex, union: set[int]) -> int:
    """Largest facet containing all vertices of ``union`` (0 when none)."""
    ids = K.facet_ids_containing(tuple(sorted(union)))
    return max((len(K.facet_set(i)) for i in ids), default=0)


def _upper_adjacent(K: SimplicialComplex, s: Simplex, t: Simplex, p: int) -> bool:
    union = set(s) | set(t)
    if len(union) > p + 1 or p > K.dim:
        return False
    return _max_common_facet_size(K, union) >= p + 1


def _lower_adjacent(s: Simplex, t: Simplex, p: int) -> bool:
    return len(set(s) & set(t)) >= p + 1


# ---------------------------------------------------------------------------
# lower degrees
# ---------------------------------------------------------------------------

def deg_L_hp(K: SimplicialComplex, s, h: int, p: int) -> int:
    """Number of (q-h)-simplices sharing a common p-face with ``s``.

    ``h`` may be negative (counting higher-dimensional partners); the
    simplex itself is excluded.  Out-of-range ``p`` yields zero.
    """
    _require_closed(K, "deg_L_hp")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    if p < 0 or p > min(q, q - h):
        return 0
    sset = set(s)
    count = 0
    for t in K.simplices(q - h):
        if t != s and len(sset & set(t)) >= p + 1:
            count += 1
    return count


def deg_L_hp_strict(K: SimplicialComplex, s, h: int, p: int) -> int:
    """Partners adjacent at p but not at p+1: the telescoped difference."""
    return deg_L_hp(K, s, h, p) - deg_L_hp(K, s, h, p + 1)


def deg_L_p(K: SimplicialComplex, s, p: int) -> int:
    """Stored simplices of any dimension sharing a common p-face with ``s``."""
    _require_closed(K, "deg_L_p")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    return sum(deg_L_hp(K, s, h, p) for h in range(q - K.dim, q - p + 1))


def deg_L_p_strict(K: SimplicialComplex, s, p: int) -> int:
    _require_closed(K, "deg_L_p_strict")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    return sum(deg_L_hp_strict(K, s, h, p) for h in range(q - K.dim, q - p + 1))


# ---------------------------------------------------------------------------
# upper degrees
# ---------------------------------------------------------------------------

def deg_U_hp(K: SimplicialComplex, s, h: int, p: int) -> int:
    """Number of (q+h)-simplices jointly contained with ``s`` in a p-simplex.

    For ``p == q+h`` this is the cofacet count at that dimension (self
    excluded when ``h == 0``).  ``h`` may be negative.
    """
    _require_closed(K, "deg_U_hp")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    if q + h < 0 or q + h > K.dim or p > K.dim or p < max(q, q + h):
        return 0
    count = 0
    for t in K.simplices(q + h):
        if t != s and _upper_adjacent(K, s, t, p):
            count += 1
    return count


def strict_upper_from_upper(upper_vec: Sequence[int], h: int) -> int:
    """Alternating binomial-weighted sum turning plain upper degrees strict.

    ``upper_vec[i]`` must hold the count of (q+h+i)-simplices containing
    the target; the result is the count of those not nested one level up.
    """
    return sum((-1) ** i * upper_vec[i] * comb(h + i, h) for i in range(len(upper_vec)))


def deg_U_hp_strict(K: SimplicialComplex, s, h: int, method: str = "direct") -> int:
    """Strict upper degree at ``p = q+h``: containing simplices that are facets.

    ``method="direct"`` counts (q+h)-cofacets not nested in any
    (q+h+1)-simplex and is always exact.  ``method="alternating"``
    evaluates the inclusion-exclusion sum over the plain upper degrees;
    that sum telescopes correctly only when the maximal cofaces of ``s``
    pairwise intersect in ``s`` alone (a bouquet-like star), and can go
    negative otherwise because shared intermediate cofaces are subtracted
    once per containing simplex.
    """
    _require_closed(K, "deg_U_hp_strict")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    if q + h > K.dim or q + h < 0:
        return 0
    if method == "alternating":
        if h < 1:
            raise DimensionError("the alternating-sum route needs h >= 1")
        vec = [deg_U_hp(K, s, h + i, q + h + i) for i in range(K.dim - (q + h) + 1)]
        return strict_upper_from_upper(vec, h)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    count = 0
    for t in K.cofacets(s, q + h):
        if t != s and t in K._facet_index:
            count += 1
    return count


def deg_U_p(K: SimplicialComplex, s, p: int) -> int:
    """Stored simplices of any dimension p-upper adjacent to ``s``."""
    _require_closed(K, "deg_U_p")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    return sum(deg_U_hp(K, s, h, p) for h in range(-q, p - q + 1))


def deg_U_p_strict(K: SimplicialComplex, s, p: int) -> int:
    """Partners p-upper adjacent but not (p+1)-upper adjacent."""
    _require_closed(K, "deg_U_p_strict")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    count = 0
    for h in range(-q, p - q + 1):
        if q + h < 0 or q + h > K.dim:
            continue
        for t in K.simplices(q + h):
            if t != s and _upper_adjacent(K, s, t, p) and not _upper_adjacent(K, s, t, p + 1):
                count += 1
    return count


# ---------------------------------------------------------------------------
# facet degrees
# ---------------------------------------------------------------------------

def facet_degree(K: SimplicialComplex, s, include_self: bool = True) -> int:
    """Number of facets containing ``s``.

    With ``include_self=False`` a simplex that is itself a facet does not
    count itself, matching the strict-containment reading of the
    alternating-sum formula.  Works in both storage modes (only the facet
    list is consulted).
    """
    s = as_simplex(s)
    if s not in K:
        raise NotInComplex(f"{s} is not stored in the complex")
    n = len(K.facet_ids_containing(s))
    if not include_self and s in K._facet_index:
        n -= 1
    return n


# ---------------------------------------------------------------------------
# general adjacency
# ---------------------------------------------------------------------------

def adj_p(K: SimplicialComplex, s, t, p: int) -> int:
    """Indicator that ``t`` is p-adjacent to ``s``.

    p-adjacent means strictly p-lower adjacent while no simplex of the
    minimal joining dimension ``p' = dim(s)+dim(t)-p`` contains both.
    Self-adjacency is 0 by convention.
    """
    _require_closed(K, "adj_p")
    s, t = as_simplex(s), as_simplex(t)
    if s == t:
        return 0
    if p < 0:
        return 0
    inter = len(set(s) & set(t))
    if inter != p + 1:
        return 0
    p_prime = (len(s) - 1) + (len(t) - 1) - p
    if _upper_adjacent(K, s, t, p_prime):
        return 0
    return 1


def deg_A_p(K: SimplicialComplex, s, p: int) -> int:
    """Count of stored simplices p-adjacent to ``s`` (all dimensions)."""
    _require_closed(K, "deg_A_p")
    s = as_simplex(s)
    _require_stored(K, s)
    count = 0
    for qp in range(p, K.dim + 1):
        for t in K.simplices(qp):
            count += adj_p(K, s, t, p)
    return count


def maximal_adjacent_simplices(K: SimplicialComplex, s, p: int | None = None) -> set[Simplex]:
    """Inclusion-maximal members of the p-adjacent set of ``s``.

    With ``p=None`` the union over ``p = 0 .. dim(s)-1`` is returned (the
    communities counted by the maximal simplicial degree).  Enumeration
    works off the facet list: every maximal partner is of the form
    ``(F - s) | A`` for a facet ``F`` and a nonempty proper subset ``A``
    of ``F & s``, subject to the union with ``s`` not being stored and no
    other facet extending the candidate outside ``s``.
    """
    _require_closed(K, "maximal_adjacent_simplices")
    s = as_simplex(s)
    _require_stored(K, s)
    q = len(s) - 1
    sset = set(s)
    if p is None:
        sizes = range(1, q + 1)
    elif 0 <= p <= q:
        sizes = range(p + 1, p + 2)
    else:
        return set()
    out: set[Simplex] = set()
    candidate_facets = {fid for v in s for fid in K._vertex_to_facets.get(v, ())}
    for fid in candidate_facets:
        fset = K.facet_set(fid)
        inter = sorted(fset & sset)
        wider = sorted(fset - sset)
        if not inter or not wider:
            continue
        # every candidate built from this facet joins s into s | W; if that
        # union is stored, all of them are upper adjacent to s and drop out
        if tuple(sorted(sset | set(wider))) in K:
            continue
        wset = set(wider)
        for k in sizes:
            if k > len(inter):
                continue
            for a in combinations(inter, k):
                cand = tuple(sorted(wider + list(a)))
                if cand in out:
                    continue
                ok = True
                for gid in K.facet_ids_containing(cand):
                    if not (K.facet_set(gid) - sset) <= wset:
                        ok = False
                        break
                if ok:
                    out.add(cand)
    return out


def deg_A_p_maximal(K: SimplicialComplex, s, p: int) -> int:
    """Maximal p-adjacency degree: only inclusion-maximal partners count."""
    return len(maximal_adjacent_simplices(K, s, p))


def deg_p1p2(K: SimplicialComplex, s, p1: int, p2: int, strict_upper: bool = False) -> int:
    """Two-parameter degree: upper connectivity at p1 plus maximal adjacency at p2."""
    s = as_simplex(s)
    q = len(s) - 1
    if not (p1 > q and p2 < q):
        raise ParamError(f"need p1 > {q} > p2, got p1={p1}, p2={p2}")
    up = deg_U_p_strict(K, s, p1) if strict_upper else deg_U_p(K, s, p1)
    return up + deg_A_p_maximal(K, s, p2)


def maximal_simplicial_degree(K: SimplicialComplex, s,
                              include_self: bool = True) -> tuple[int, int, int]:
    """(adjacent part, upper part, total) of the maximal simplicial degree.

    The upper part counts distinct facets the simplex is nested in; the
    adjacent part counts inclusion-maximal communities its strict faces
    collaborate with, summed over every face dimension.
    """
    _require_closed(K, "maximal_simplicial_degree")
    s = as_simplex(s)
    _require_stored(K, s)
    deg_a = len(maximal_adjacent_simplices(K, s, None))
    deg_u = facet_degree(K, s, include_self=include_self)
    return deg_a, deg_u, deg_a + deg_u


# ---------------------------------------------------------------------------
# query objects and batch evaluation
# ---------------------------------------------------------------------------

class DegreeKind(str, Enum):
    lower_hp = "lower_hp"
    lower_hp_strict = "lower_hp_strict"
    lower_p = "lower_p"
    lower_p_strict = "lower_p_strict"
    upper_hp = "upper_hp"
    upper_hp_strict = "upper_hp_strict"
    upper_p = "upper_p"
    upper_p_strict = "upper_p_strict"
    facet_deg = "facet_deg"
    adj_p = "adj_p"
    adj_p_maximal = "adj_p_maximal"
    p1p2 = "p1p2"
    maximal_adj_total = "maximal_adj_total"
    maximal_simplicial = "maximal_simplicial"


@dataclass
class DegreeQuery:
    target: Simplex
    kind: DegreeKind
    h: int | None = None
    p: int | None = None
    p1: int | None = None
    p2: int | None = None

    def params(self) -> str:
        parts = [f"{k}={v}" for k, v in (("h", self.h), ("p", self.p),
                                         ("p1", self.p1), ("p2", self.p2)) if v is not None]
        return ";".join(parts)


@dataclass
class DegreeResult:
    value: int
    witnesses: list[Simplex] | None = None


def _witnessable(K: SimplicialComplex, s: Simplex, kind: DegreeKind,
                 h, p) -> list[Simplex] | None:
    q = len(s) - 1
    if kind is DegreeKind.facet_deg:
        return [K.facets_list[i] for i in sorted(K.facet_ids_containing(s))]
    if kind is DegreeKind.adj_p_maximal:
        return sorted(maximal_adjacent_simplices(K, s, p))
    if kind is DegreeKind.maximal_adj_total:
        return sorted(maximal_adjacent_simplices(K, s, None))
    if kind is DegreeKind.lower_hp:
        if p < 0 or p > min(q, q - h):
            return []
        return [t for t in K.simplices(q - h) if t != s and _lower_adjacent(s, t, p)]
    if kind is DegreeKind.upper_hp:
        if q + h < 0 or q + h > K.dim or p > K.dim or p < max(q, q + h):
            return []
        return [t for t in K.simplices(q + h) if t != s and _upper_adjacent(K, s, t, p)]
    return None


def evaluate_query(K: SimplicialComplex, query: DegreeQuery,
                   with_witnesses: bool = False) -> DegreeResult:
    """Dispatch a degree query; witness lists are opt-in (memory)."""
    s = as_simplex(query.target)
    k, h, p = query.kind, query.h, query.p
    if k is DegreeKind.lower_hp:
        value = deg_L_hp(K, s, h, p)
    elif k is DegreeKind.lower_hp_strict:
        value = deg_L_hp_strict(K, s, h, p)
    elif k is DegreeKind.lower_p:
        value = deg_L_p(K, s, p)
    elif k is DegreeKind.lower_p_strict:
        value = deg_L_p_strict(K, s, p)
    elif k is DegreeKind.upper_hp:
        value = deg_U_hp(K, s, h, p)
    elif k is DegreeKind.upper_hp_strict:
        value = deg_U_hp_strict(K, s, h)
    elif k is DegreeKind.upper_p:
        value = deg_U_p(K, s, p)
    elif k is DegreeKind.upper_p_strict:
        value = deg_U_p_strict(K, s, p)
    elif k is DegreeKind.facet_deg:
        value = facet_degree(K, s)
    elif k is DegreeKind.adj_p:
        value = deg_A_p(K, s, p)
    elif k is DegreeKind.adj_p_maximal:
        value = deg_A_p_maximal(K, s, p)
    elif k is DegreeKind.p1p2:
        value = deg_p1p2(K, s, query.p1, query.p2)
    elif k is DegreeKind.maximal_adj_total:
        value = len(maximal_adjacent_simplices(K, s, None))
    elif k is DegreeKind.maximal_simplicial:
        value = maximal_simplicial_degree(K, s)[2]
    else:  # pragma: no cover
        raise ValueError(f"unknown kind {k!r}")
    witnesses = _witnessable(K, s, k, h, p) if with_witnesses else None
    if witnesses is not None and len(witnesses) != value:
        raise AssertionError(
            f"witness count {len(witnesses)} != value {value} for {query}")
    return DegreeResult(value, witnesses)
