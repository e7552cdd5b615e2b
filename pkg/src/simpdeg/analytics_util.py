"""Shared statistic conventions: rounding, median and mode tie-breaking.

Pinned so that golden outputs are stable: means are printed with two
decimals under banker's rounding, the median is the lower median, and
mode ties break to the smallest value.
"""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal
from typing import Iterable, Sequence

from .errors import EmptyDataset


def round2(x: float) -> float:
    """Two-decimal rounding, half to even."""
    return float(Decimal(repr(float(x))).quantize(Decimal("0.01"), rounding=ROUND_HALF_EVEN))


def lower_median(values: Sequence[int]) -> int:
    """Lower median: the element at index (n-1)//2 of the sorted values."""
    if not values:
        raise EmptyDataset("median of an empty population")
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]


def smallest_mode(values: Iterable[int]) -> int:
    """Most frequent value; ties break to the smallest one."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    if not counts:
        raise EmptyDataset("mode of an empty population")
    best = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))
    return best[0]
