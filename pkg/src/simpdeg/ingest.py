"""Simplex-stream dataset parsing and the dedup/facet pipeline.

A dataset ``<name>`` is three parallel text files of ASCII integers:
``<name>-nverts.txt`` (one simplex size per line), ``<name>-simplices.txt``
(the vertex labels of every simplex, flattened in order, one per line)
and ``<name>-times.txt`` (one timestamp per line).  Timestamps are parsed
for format validation and then dropped.

The pipeline counts records, deduplicates them on the ordered tuple
(distinct) and on the sorted tuple (unordered distinct), and extracts the
facets: unordered distinct simplices that are not a face of another one.
"""

from __future__ import annotations

import os
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .analytics_util import round2
from .complexes import (SimplicialComplex, Simplex, _maximal_elements,
                        build_complex)
from .errors import FormatError

MAX_RECORD_SIZE = 25
DATASET_FILES = ("nverts", "simplices", "times")
DATA_URL_ENV = "SIMPDEG_DATA_URL"
DATA_DIR_ENV = "SIMPDEG_DATA_DIR"


@dataclass
class SimplexRecord:
    """One reported simplex: raw labels in file order plus a timestamp."""

    vertices: tuple[int, ...]
    timestamp: int


def _int_lines(path: Path) -> list[int]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            token = line.strip()
            if not token:
                continue
            try:
                out.append(int(token))
            except ValueError:
                raise FormatError(f"{path.name} line {lineno}: non-integer token {token!r}")
    return out


def resolve_dataset_dir(directory, name: str) -> Path:
    """Accept both ``dir/<name>-nverts.txt`` and ``dir/<name>/<name>-nverts.txt``."""
    base = Path(directory)
    if (base / f"{name}-nverts.txt").exists():
        return base
    if (base / name / f"{name}-nverts.txt").exists():
        return base / name
    return base


class ScholpReader:
    """Iterates the records of one dataset, validating the three files.

    Records larger than ``max_size`` vertices are skipped and counted in
    ``skipped_oversize`` rather than failing, so uncapped corpora still
    parse.
    """

    def __init__(self, directory, name: str, max_size: int = MAX_RECORD_SIZE):
        self.directory = resolve_dataset_dir(directory, name)
        self.name = name
        self.max_size = max_size
        self.skipped_oversize = 0
        for suffix in DATASET_FILES:
            p = self.directory / f"{name}-{suffix}.txt"
            if not p.exists():
                raise FormatError(f"missing dataset file {p}")

    def _path(self, suffix: str) -> Path:
        return self.directory / f"{self.name}-{suffix}.txt"

    def __iter__(self) -> Iterator[SimplexRecord]:
        nverts = _int_lines(self._path("nverts"))
        times = _int_lines(self._path("times"))
        if len(times) != len(nverts):
            raise FormatError(
                f"{self.name}-times.txt has {len(times)} records but "
                f"{self.name}-nverts.txt has {len(nverts)}")
        spath = self._path("simplices")
        self.skipped_oversize = 0
        with open(spath, "r", encoding="ascii") as fh:
            lineno = 0
            for rec_no, (size, stamp) in enumerate(zip(nverts, times), start=1):
                if size < 1:
                    raise FormatError(
                        f"{self.name}-nverts.txt line {rec_no}: simplex size {size} < 1")
                verts = []
                for _ in range(size):
                    line = fh.readline()
                    if not line:
                        raise FormatError(
                            f"{self.name}-simplices.txt line {lineno + 1}: file ends "
                            f"inside record {rec_no} (needs {size} vertices)")
                    lineno += 1
                    token = line.strip()
                    try:
                        verts.append(int(token))
                    except ValueError:
                        raise FormatError(
                            f"{self.name}-simplices.txt line {lineno}: "
                            f"non-integer token {token!r}")
                if size > self.max_size:
                    self.skipped_oversize += 1
                    continue
                yield SimplexRecord(tuple(verts), stamp)
            trailing = sum(1 for line in fh if line.strip())
            if trailing:
                raise FormatError(
                    f"{self.name}-simplices.txt line {lineno + 1}: {trailing} "
                    f"vertex lines beyond the {sum(nverts)} promised by nverts")


def parse_scholp(directory, name: str, max_size: int = MAX_RECORD_SIZE) -> ScholpReader:
    """Open a dataset for record streaming; validation happens on iteration."""
    return ScholpReader(directory, name, max_size)


@dataclass
class DatasetSummary:
    """The counts of one summary-table row."""

    name: str
    nodes: int
    simplices: int
    distinct_simplices: int
    unordered_distinct_simplices: int
    facets: int
    skipped_oversize: int = 0
    declared_nodes: int | None = None

    @property
    def pct_facets_per_simplices(self) -> float:
        return round2(100.0 * self.facets / self.simplices) if self.simplices else 0.0

    @property
    def pct_facets_per_udsimplices(self) -> float:
        if not self.unordered_distinct_simplices:
            return 0.0
        return round2(100.0 * self.facets / self.unordered_distinct_simplices)

    CSV_HEADER = ("dataset,nodes,simplices,distinct_simplices,"
                  "unordered_distinct_simplices,facets,"
                  "pct_facets_per_simplices,pct_facets_per_udsimplices")

    def to_csv_row(self) -> str:
        return (f"{self.name},{self.nodes},{self.simplices},{self.distinct_simplices},"
                f"{self.unordered_distinct_simplices},{self.facets},"
                f"{self.pct_facets_per_simplices:.2f},{self.pct_facets_per_udsimplices:.2f}")

    def to_json_dict(self) -> dict:
        out = {
            "dataset": self.name,
            "nodes": self.nodes,
            "simplices": self.simplices,
            "distinct_simplices": self.distinct_simplices,
            "unordered_distinct_simplices": self.unordered_distinct_simplices,
            "facets": self.facets,
            "pct_facets_per_simplices": self.pct_facets_per_simplices,
            "pct_facets_per_udsimplices": self.pct_facets_per_udsimplices,
        }
        if self.skipped_oversize:
            out["skipped_oversize"] = self.skipped_oversize
        if self.declared_nodes is not None:
            out["declared_nodes"] = self.declared_nodes
        return out


def extract_facets(unordered_distinct: Iterable[Simplex]) -> list[Simplex]:
    """Maximal elements under inclusion, largest first, then lexicographic."""
    return _maximal_elements(list(unordered_distinct))


def dedup_pipeline(records: Iterable[SimplexRecord], name: str = "") \
        -> tuple[DatasetSummary, list[Simplex], list[Simplex]]:
    """Count, deduplicate and facet-extract a record stream.

    Returns the summary row, the sorted unordered-distinct simplices and
    the facet list (largest first).
    """
    n_records = 0
    ordered_seen: set[tuple[int, ...]] = set()
    unordered_seen: set[Simplex] = set()
    labels: set[int] = set()
    for rec in records:
        n_records += 1
        ordered_seen.add(rec.vertices)
        # the unordered key is the vertex set, so repeated labels inside a
        # record collapse
        unordered_seen.add(tuple(sorted(set(rec.vertices))))
        labels.update(rec.vertices)
    ud = sorted(unordered_seen, key=lambda s: (len(s), s))
    facets = extract_facets(ud)
    skipped = getattr(records, "skipped_oversize", 0)
    summary = DatasetSummary(
        name=name or getattr(records, "name", ""),
        nodes=len(labels),
        simplices=n_records,
        distinct_simplices=len(ordered_seen),
        unordered_distinct_simplices=len(unordered_seen),
        facets=len(facets),
        skipped_oversize=skipped,
    )
    return summary, ud, facets


def _declared_node_count(directory: Path, name: str) -> int | None:
    for suffix in ("node-labels", "node-names"):
        p = directory / f"{name}-{suffix}.txt"
        if p.exists():
            with open(p, "r", encoding="utf-8", errors="replace") as fh:
                return sum(1 for line in fh if line.strip())
    return None


def load_dataset(directory, name: str, mode: str = "closed") \
        -> tuple[SimplicialComplex, DatasetSummary]:
    """Parse, deduplicate and build a complex from the unordered distinct set."""
    reader = parse_scholp(directory, name)
    summary, ud, _facets = dedup_pipeline(reader, name)
    summary.declared_nodes = _declared_node_count(reader.directory, name)
    K = build_complex(ud, mode=mode)
    return K, summary


def fetch_dataset(name: str, dest_dir, base_url: str | None = None,
                  timeout: float = 60.0) -> Path:
    """Download and cache the three dataset files (plus node labels if any).

    The base URL comes from the argument or the ``SIMPDEG_DATA_URL``
    environment variable; unset means offline operation and an error
    here.
    """
    base = base_url or os.environ.get(DATA_URL_ENV)
    if not base:
        raise FormatError(
            f"no dataset URL configured; set {DATA_URL_ENV} or pass base_url")
    dest = Path(dest_dir) / name
    dest.mkdir(parents=True, exist_ok=True)
    for suffix in DATASET_FILES:
        fname = f"{name}-{suffix}.txt"
        target = dest / fname
        if target.exists():
            continue
        url = f"{base.rstrip('/')}/{name}/{fname}"
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            data = resp.read()
        target.write_bytes(data)
    for suffix in ("node-labels", "node-names"):
        fname = f"{name}-{suffix}.txt"
        target = dest / fname
        if target.exists():
            continue
        url = f"{base.rstrip('/')}/{name}/{fname}"
        try:
            with urllib.request.urlopen(url, timeout=timeout) as resp:
                target.write_bytes(resp.read())
        except Exception:
            pass  # optional file
    return dest
