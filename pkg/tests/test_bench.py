import numpy as np
import pytest

from lawsort.algorithms import HEAP_SORT, INSERT_SORT
from lawsort.core import mode
from lawsort.harness.bench import HEADER, generate, run_bench


@pytest.mark.parametrize("shape, expected", [
    ("sorted", [0, 1, 2, 3]),
    ("reverse", [4, 3, 2, 1]),
    ("constant", [0, 0, 0, 0]),
])
def test_generated_shapes(shape, expected):
    assert generate(shape, 4, np.random.default_rng(0)) == expected


def test_random_shape_is_seeded():
    assert generate("random", 6, np.random.default_rng(2)) == generate("random", 6, np.random.default_rng(2))


def test_unknown_shape():
    with pytest.raises(ValueError):
        generate("zigzag", 3, np.random.default_rng(0))


def test_rows():
    rows = run_bench(sizes=[8, 16], shapes=["random"], algorithms=[INSERT_SORT, HEAP_SORT], repeats=2)
    assert [(r.algorithm, r.n) for r in rows] == [("insert", 8), ("heap", 8), ("insert", 16), ("heap", 16)]
    assert all(r.median_s >= 0 for r in rows)
    assert len(rows[0].line()) == len(HEADER)


def test_bench_restores_the_mode():
    run_bench(sizes=[4], shapes=["sorted"], algorithms=[INSERT_SORT], repeats=1)
    assert mode.current_mode() is mode.Mode.CHECKED
