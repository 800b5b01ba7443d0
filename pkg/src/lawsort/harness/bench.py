"""
bench.py
--------
Timing table for ``lawsort bench``: every algorithm on generated inputs of
each size and shape, median of five runs, trusted mode, single-threaded.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterable, List, Sequence

import numpy as np

from ..algorithms import ALL_ALGORITHMS, AlgorithmId, sort_with
from ..core import constants as C
from ..core.mode import Mode, build_mode
from ..functors.carriers import elist

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    shape: str
    n: int
    median_s: float

    def line(self) -> str:
        return f"{self.algorithm:<8} {self.shape:<9} {self.n:>7} {self.median_s * 1e3:>11.3f}"


HEADER = f"{'algo':<8} {'shape':<9} {'n':>7} {'median_ms':>11}"


def generate(shape: str, n: int, rng: np.random.Generator) -> List[int]:
    match shape:
        case "random":
            return rng.integers(-C.VALUE_BOUND, C.VALUE_BOUND + 1, size=n).tolist()
        case "sorted":
            return list(range(n))
        case "reverse":
            return list(range(n, 0, -1))
        case "constant":
            return [0] * n
    raise ValueError(f"unknown input shape {shape!r}; expected one of {', '.join(C.BENCH_SHAPES)}")


def time_once(algo: AlgorithmId, values: Sequence[int]) -> float:
    xs = elist(values)
    start = time.perf_counter()
    sort_with(algo, xs)
    return time.perf_counter() - start


def run_bench(sizes: Iterable[int] = C.BENCH_SIZES,
              shapes: Iterable[str] = C.BENCH_SHAPES,
              algorithms: Iterable[AlgorithmId] = ALL_ALGORITHMS,
              seed: int = C.DEFAULT_SEED,
              repeats: int = C.BENCH_REPEATS) -> List[BenchRow]:
    rng = np.random.default_rng(seed)
    rows = []
    algorithms = list(algorithms)
    with build_mode(Mode.TRUSTED):
        for n in sizes:
            for shape in shapes:
                values = generate(shape, n, rng)
                for algo in algorithms:
                    times = [time_once(algo, values) for _ in range(repeats)]
                    row = BenchRow(algo.name, shape, n, float(np.median(times)))
                    log.debug("%s", row)
                    rows.append(row)
    return rows
