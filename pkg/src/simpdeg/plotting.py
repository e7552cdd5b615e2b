"""Distribution rendering: delimited output plus a log-log scatter figure.

Output is deterministic byte-for-byte for a given distribution: the SVG
hash salt is pinned and the figure metadata carries no timestamp, so
golden-file comparisons work.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .analytics import DegreeDistribution  # noqa: E402
from .errors import EmptyDataset, IoError  # noqa: E402

_SVG_SALT = "simpdeg"


def emit_plot(dist: DegreeDistribution, path, title: str = "degree distribution") \
        -> tuple[Path, Path]:
    """Write ``<path>`` as an SVG log-log scatter and a CSV next to it.

    The CSV holds one ``degree,probability`` row per support point; the
    figure puts degree on the x axis and probability on the y axis, both
    logarithmic.  Returns (csv_path, svg_path).
    """
    support = dist.support()
    if not support:
        raise EmptyDataset("cannot plot an empty distribution")
    svg_path = Path(path)
    csv_path = svg_path.with_suffix(".csv")
    degrees = support
    probs = [dist.normalized[k] for k in degrees]
    try:
        with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("degree,probability\n")
            for d, p in zip(degrees, probs):
                fh.write(f"{d},{p!r}\n")
    except OSError as exc:
        raise IoError(f"cannot write {csv_path}: {exc}") from exc

    with plt.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig, ax = plt.subplots(figsize=(5.0, 4.0))
        ax.scatter(degrees, probs, s=14, color="#1f77b4")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("degree")
        ax.set_ylabel("probability")
        ax.set_title(title)
        fig.tight_layout()
        try:
            fig.savefig(svg_path, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise IoError(f"cannot write {svg_path}: {exc}") from exc
        finally:
            plt.close(fig)
    return csv_path, svg_path
