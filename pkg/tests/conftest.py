"""Shared fixtures and the acceptance-criteria summary hook."""

import os
from pathlib import Path

import pytest

from simpdeg import build_complex

_ACCEPTANCE: list[tuple] = []


def record_criterion(num: str, name: str, status: str, detail: str = "") -> None:
    _ACCEPTANCE.append((num, name, status, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, status, detail in sorted(_ACCEPTANCE, key=lambda t: str(t[0])):
        line = f"criterion {num:>3}: {status:<5} {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


def dataset_root() -> Path:
    env = os.environ.get("SIMPDEG_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data"


def require_dataset(name: str) -> Path:
    """Directory holding the dataset files, or a skip when unavailable."""
    root = dataset_root()
    for cand in (root, root / name):
        if (cand / f"{name}-nverts.txt").exists():
            return cand
    url = os.environ.get("SIMPDEG_DATA_URL")
    if url:
        from simpdeg.ingest import fetch_dataset
        try:
            return fetch_dataset(name, root, base_url=url)
        except Exception as exc:  # network trouble is a skip, not a failure
            pytest.skip(f"dataset {name} fetch failed: {exc}")
    pytest.skip(f"dataset {name} not found under {root} "
                f"(set SIMPDEG_DATA_DIR or SIMPDEG_DATA_URL)")


@pytest.fixture
def two_triangles():
    return build_complex([(0, 1, 2), (1, 2, 3)], mode="closed")


@pytest.fixture
def single_triangle():
    return build_complex([(0, 1, 2)], mode="closed")


@pytest.fixture
def single_tetrahedron():
    return build_complex([(0, 1, 2, 3)], mode="closed")


def write_micro_dataset(directory: Path, name: str = "toy") -> Path:
    """The four-record worked example: {1,4,6}, {4,1,6}, {6,4}, {6,4}."""
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"{name}-nverts.txt").write_text("3\n3\n2\n2\n")
    (directory / f"{name}-simplices.txt").write_text(
        "1\n4\n6\n4\n1\n6\n6\n4\n6\n4\n")
    (directory / f"{name}-times.txt").write_text("10\n11\n12\n13\n")
    return directory
