"""
oracles.py
----------
Extrinsic reference implementations the derived algorithms are checked
against.  Nothing here imports from `lawsort.algorithms` or `lawsort.laws`.
"""
from __future__ import annotations

from collections import Counter
from typing import Any, List, Sequence, Tuple


def reference_sort(xs: Sequence[Any]) -> List[Any]:
    return sorted(xs)


def tally(xs: Sequence[Any]) -> Counter:
    return Counter(xs)


def is_nondecreasing(xs: Sequence[Any]) -> bool:
    return all(a <= b for a, b in zip(xs, xs[1:]))


def direct_insert(a: Any, ys: Sequence[Any]) -> List[Any]:
    """Insert ``a`` into sorted ``ys`` in front of the first element it does not exceed."""
    for i, b in enumerate(ys):
        if a <= b:
            return [*ys[:i], a, *ys[i:]]
    return [*ys, a]


def direct_select(xs: Sequence[Any]) -> Tuple[Any, List[Any]]:
    """Least element (first occurrence) and the rest in their original order."""
    i = min(range(len(xs)), key=lambda k: (xs[k], k))
    return xs[i], [*xs[:i], *xs[i + 1:]]
