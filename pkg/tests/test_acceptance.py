"""Acceptance suite: one test per criterion, one summary line each.

Dataset-backed criteria locate the public corpus through SIMPDEG_DATA_DIR
(default ./data) or fetch it when SIMPDEG_DATA_URL is set; they skip when
the files are unavailable.  Everything else runs offline.
"""

import json
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest
from _pytest.outcomes import Skipped

from conftest import record_criterion, require_dataset
from simpdeg import (boundary_matrix, deg_L_hp, lower_laplacian, odeg_L,
                     odeg_U, strict_upper_from_upper, upper_laplacian,
                     deg_U_hp, deg_U_hp_strict, maximal_simplicial_degree)
from simpdeg.analytics import (classical_degree_stats, facet_size_stats,
                               simplicial_degree_stats)
from simpdeg.gallery import (GLUED_BLUE, GLUED_SHARED_EDGE, glued_tetrahedra,
                             triangle_fan, vertex_bouquet)
from simpdeg.ingest import SimplexRecord, dedup_pipeline, load_dataset
from simpdeg.oracles import (run_alternating_route_comparison,
                             run_classical_suite, run_equivalence_suite,
                             run_laplacian_suite)

GOLDEN = Path(__file__).parent / "golden"


@contextmanager
def criterion(num, name):
    try:
        yield
    except Skipped as exc:
        record_criterion(num, name, "SKIP", str(exc)[:100])
        raise
    except BaseException as exc:
        record_criterion(num, name, "FAIL", str(exc).splitlines()[0][:120])
        raise
    else:
        record_criterion(num, name, "PASS")


def _stats_tuple(stats):
    return (stats.max, stats.mean, stats.median)


# -- criterion 1: summary-table reproduction ----------------------------------

TABLE1 = {
    "email-Enron": (143, 10883, 1542, 1512, 433, 3.98, 28.64),
    "contact-primary-school": (242, 106879, 12799, 12704, 8010, None, None),
    "NDC-classes": (1161, 49724, 1222, 1088, 563, None, None),
}


@pytest.mark.parametrize("name", sorted(TABLE1))
def test_criterion_01_summary_counts(name):
    with criterion("01", f"summary counts ({name})"):
        directory = require_dataset(name)
        t0 = time.perf_counter()
        _K, summary = load_dataset(directory, name, mode="explicit")
        elapsed = time.perf_counter() - t0
        nodes, simp, dist, ud, fac, pct1, pct2 = TABLE1[name]
        assert summary.nodes == nodes
        assert summary.simplices == simp
        assert summary.distinct_simplices == dist
        assert summary.unordered_distinct_simplices == ud
        assert summary.facets == fac
        if pct1 is not None:
            assert summary.pct_facets_per_simplices == pct1
            assert summary.pct_facets_per_udsimplices == pct2
        assert elapsed < 30.0, f"summarize took {elapsed:.1f}s"


# -- criterion 2: facet-size statistics ----------------------------------------

TABLE2 = {
    "email-Enron": (18, 3.85, 3, 2),
    "contact-primary-school": (5, 2.57, 3, 3),
    "threads-ask-ubuntu": (14, 2.00, 2, 2),
}


@pytest.mark.parametrize("name", sorted(TABLE2))
def test_criterion_02_facet_sizes(name):
    with criterion("02", f"facet size stats ({name})"):
        directory = require_dataset(name)
        K, _summary = load_dataset(directory, name, mode="explicit")
        stats = facet_size_stats(K.facets())
        max_s, mean_s, median_s, mode_s = TABLE2[name]
        assert stats.max_s == max_s
        assert stats.median_s == median_s
        assert stats.mode_s == mode_s
        assert abs(stats.mean_s - mean_s) <= 0.005


# -- criterion 3: the micro pipeline -------------------------------------------

def test_criterion_03_micro_pipeline():
    with criterion("03", "micro pipeline counts (4, 3, 2, 1)"):
        records = [SimplexRecord(v, i) for i, v in
                   enumerate([(1, 4, 6), (4, 1, 6), (6, 4), (6, 4)])]
        summary, _ud, _facets = dedup_pipeline(records, "micro")
        assert (summary.simplices, summary.distinct_simplices,
                summary.unordered_distinct_simplices, summary.facets) == (4, 3, 2, 1)


# -- criterion 4: classical node degrees ----------------------------------------

def test_criterion_04_classical_degree_table():
    with criterion("04", "classical and node-to-facets degrees (email-Enron)"):
        directory = require_dataset("email-Enron")
        K, _summary = load_dataset(directory, "email-Enron", mode="explicit")
        # the distinct-co-member counting mode; the reported 2-node-simplex
        # mode provably cannot reach this mean (see the decisions notes),
        # so its values are surfaced for the record instead of asserted
        k_closure, kf = classical_degree_stats(K, edge_mode="closure")
        k_explicit, _ = classical_degree_stats(K, edge_mode="explicit")
        assert "closure" in k_closure.mode_note  # mode recorded in output
        assert _stats_tuple(k_closure) == (69, 25.17, 23), (
            f"closure-mode k={_stats_tuple(k_closure)}, "
            f"explicit-mode k={_stats_tuple(k_explicit)}")
        assert _stats_tuple(kf) == (36, 11.65, 10)
        record_criterion("04b", "explicit-edge-mode values (recorded, not asserted)",
                         "INFO", f"k={_stats_tuple(k_explicit)}")


# -- criterion 5: per-dimension degree tables ------------------------------------

def test_criterion_05_simplicial_degree_tables():
    with criterion("05", "maximal upper and maximal simplicial degrees (email-Enron)"):
        directory = require_dataset("email-Enron")
        K, _summary = load_dataset(directory, "email-Enron", mode="explicit")
        golden = json.loads((GOLDEN / "email-Enron-tables45.json").read_text())
        expected = {("kU_star", 2): (12, 1.47, 1), ("kU_star", 1): (18, 2.25, 1),
                    ("k_star", 2): (79, 41.78, 42), ("k_star", 1): (64, 27.68, 27)}
        results = {}
        for (kind, q), want in expected.items():
            for enumeration in ("closure", "explicit"):
                stats = simplicial_degree_stats(K, q, kind, enumeration=enumeration)
                results[(kind, q, enumeration)] = _stats_tuple(stats)
        matching = [e for e in ("closure", "explicit")
                    if all(results[(k, q, e)] == want
                           for (k, q), want in expected.items())]
        assert matching, f"no enumeration mode reproduces the table: {results}"
        pinned = golden["enumeration"]
        assert pinned in matching, (
            f"pinned mode {pinned!r} does not match; modes that do: {matching}; "
            f"update tests/golden/email-Enron-tables45.json")
        for (kind, q), want in expected.items():
            assert tuple(golden[kind][str(q)]) == want


def test_criterion_05_cross_check_ndc_substances():
    with criterion("05x", "kU_star(q=0) equals node-to-facets row (NDC-substances)"):
        directory = require_dataset("NDC-substances")
        K, _summary = load_dataset(directory, "NDC-substances", mode="explicit")
        _k, kf = classical_degree_stats(K)
        ku0 = simplicial_degree_stats(K, 0, "kU_star", enumeration="closure")
        assert _stats_tuple(kf) == (519, 8.26, 1)
        assert _stats_tuple(ku0) == (519, 8.26, 1)
        assert ku0.population == kf.population == K.n_vertices


# -- criterion 6: the printed worked example --------------------------------------

FAN_B22 = np.array([
    [1, 1, 1, 1, 1, 0], [-1, 0, 0, 0, 0, 0], [1, -1, 0, 0, 0, 0],
    [0, 0, -1, -1, 0, 1], [0, 1, 1, 0, -1, -1], [0, 0, 0, 1, 1, 1]])
FAN_LU02 = np.array([
    [5, -1, 0, -2, 1, 2], [-1, 1, -1, 0, 0, 0], [0, -1, 2, 0, -1, 0],
    [-2, 0, 0, 3, -2, 0], [1, 0, -1, -2, 4, -2], [2, 0, 0, 0, -2, 3]])
FAN_LL22 = np.array([
    [3, 0, 1, 1, 1, 0], [0, 3, 2, 1, 0, -1], [1, 2, 3, 2, 0, -2],
    [1, 1, 2, 3, 2, 0], [1, 0, 0, 2, 3, 2], [0, -1, -2, 0, 2, 3]])


def test_criterion_06_worked_operator_example():
    with criterion("06", "two-step boundary and Laplacians match printed matrices"):
        t0 = time.perf_counter()
        K = triangle_fan()
        assert np.array_equal(boundary_matrix(K, 2, 2).to_dense(), FAN_B22)
        assert np.array_equal(upper_laplacian(K, 0, 2).to_dense(), FAN_LU02)
        assert np.array_equal(lower_laplacian(K, 2, 2).to_dense(), FAN_LL22)
        assert odeg_U(K, 2, (0,), (2,)) == 0
        assert odeg_U(K, 2, (0,), (3,)) == -2
        assert odeg_L(K, 0, (0, 1, 2), (0, 2, 4)) == 0
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, f"took {elapsed:.2f}s"


# -- criterion 7: Laplacian entry formulas on random complexes ---------------------

def test_criterion_07_entry_formula_suite():
    with criterion("07", "entry formulas on 50 seeded complexes, all (q,h,h')"):
        t0 = time.perf_counter()
        res = run_laplacian_suite(seed=7, n_complexes=50, max_vertices=12, max_dim=4)
        elapsed = time.perf_counter() - t0
        assert res.ok, res.mismatches[:5]
        assert elapsed < 120.0, f"took {elapsed:.1f}s"
        record_criterion("07t", "entry-formula suite runtime", "INFO",
                         f"{res.checks} triples in {elapsed:.1f}s")


# -- criterion 8: degree oracle equivalence -----------------------------------------

def test_criterion_08_degree_route_equivalence():
    with criterion("08", "combinatorial = matrix = brute force on 50 complexes"):
        res = run_equivalence_suite(seed=7, n_complexes=50, max_vertices=12, max_dim=4)
        assert res.ok, res.mismatches[:5]
        record_criterion("08t", "equivalence checks executed", "INFO",
                         f"{res.checks}")


def test_criterion_08_alternating_sum_identity():
    """Faithful check of the alternating-sum route against the direct count.

    The inclusion-exclusion formula for strict upper degrees is not an
    identity on complexes whose maximal cofaces overlap beyond the target
    simplex (shared intermediate cofaces are subtracted once per
    container), so this check fails on generic random complexes.  The
    analysis is recorded in the decisions notes; the direct route is the
    one every other test and the analytics pipeline rely on.
    """
    with criterion("08e", "alternating-sum route equals direct strict count"):
        res = run_alternating_route_comparison(seed=7, n_complexes=50)
        assert res.ok, (
            f"{len(res.mismatches)} of {res.checks} strict-upper-degree queries "
            f"differ between the alternating-sum route and the direct count; "
            f"first: {res.mismatches[0]}")


# -- criterion 9: classical specializations ------------------------------------------

def test_criterion_09_classical_specializations():
    with criterion("09", "one-step entry table, graph Laplacian, nilpotency"):
        res = run_classical_suite(seed=7, n_complexes=50, n_graphs=10)
        assert res.ok, res.mismatches[:5]


# -- criterion 10: reconstruction walkthroughs -----------------------------------------

def test_criterion_10_walkthrough_counts():
    with criterion("10", "reconstructed figure walkthrough counts"):
        G = glued_tetrahedra()
        assert deg_L_hp(G, GLUED_BLUE, 1, 1) == 9
        assert deg_L_hp(G, GLUED_BLUE, 2, 0) == 18
        V = vertex_bouquet()
        assert V.f_vector() == (11, 20, 15, 6, 1)
        vec1 = [deg_U_hp(V, (0,), 1 + i, 1 + i) for i in range(4)]
        assert vec1 == [10, 10, 5, 1]
        assert strict_upper_from_upper(vec1, 1) == 10 - 20 + 15 - 4 == 1
        assert deg_U_hp_strict(V, (0,), 1) == 1
        vec2 = [deg_U_hp(V, (0,), 2 + i, 2 + i) for i in range(3)]
        assert vec2 == [10, 5, 1]
        assert strict_upper_from_upper(vec2, 2) == 10 - 15 + 6 == 1
        assert deg_U_hp_strict(V, (0,), 2) == 1
        deg_a, deg_u, total = maximal_simplicial_degree(G, GLUED_SHARED_EDGE)
        assert (deg_a, deg_u, total) == (2, 2, 4)
