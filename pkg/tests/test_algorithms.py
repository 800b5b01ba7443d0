import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lawsort.algorithms import (
    ALL_ALGORITHMS,
    HEAP_FF,
    TREE_UF,
    AlgorithmId,
    build_heap,
    build_tree_fold,
    build_tree_unfold,
    heap_sort,
    insert_sort,
    select_sort,
    sort_with,
    tree_sorts,
)
from lawsort.core import constants as C
from lawsort.core.instrument import counting
from lawsort.core.mode import Mode, build_mode
from lawsort.functors import elist, olist_to_plain, validate

int64 = st.integers(C.INT64_MIN, C.INT64_MAX)


def plain(result):
    return olist_to_plain(result)


def test_worked_example():
    assert plain(insert_sort(elist([2, 1]))) == [1, 2]


@pytest.mark.parametrize("algo", ALL_ALGORITHMS, ids=str)
@pytest.mark.parametrize("values, expected", [
    ([], []),
    ([2, 1], [1, 2]),
    ([3, 1, 2, 1], [1, 1, 2, 3]),
    ([5, 5, 5], [5, 5, 5]),
    ([1, 1], [1, 1]),
    ([2, 2, 1], [1, 2, 2]),
])
def test_examples(algo, values, expected):
    assert plain(sort_with(algo, values)) == expected


@pytest.mark.parametrize("algo", ALL_ALGORITHMS, ids=str)
@given(xs=st.lists(int64, max_size=40))
@settings(max_examples=40, deadline=None)
def test_sorted_with_same_multiset(algo, xs):
    e = elist(xs)
    result = sort_with(algo, e)
    assert plain(result) == sorted(xs)
    assert result.index == e.index
    assert validate(result)


@pytest.mark.parametrize("algo", ALL_ALGORITHMS, ids=str)
def test_trusted_mode_gives_the_same_answer(algo):
    xs = [9, -3, 4, 4, 0, 12, -3]
    with build_mode(Mode.TRUSTED):
        result = sort_with(algo, xs)
    assert plain(result) == sorted(xs)
    assert validate(result)


def test_all_algorithms_agree_on_short_lists():
    for n in range(5):
        for xs in itertools.product((0, 1, 2), repeat=n):
            outputs = {plain(sort_with(algo, xs)) == sorted(xs) for algo in ALL_ALGORITHMS}
            assert outputs == {True}, xs


def test_intermediate_structures_validate():
    xs = elist([7, 3, 9, 3, 1, 8])
    for tree in (build_tree_fold(xs), build_tree_unfold(xs)):
        assert validate(tree)
        assert tree.index == xs.index
        assert tree.inorder() == [1, 3, 3, 7, 8, 9]
    heap = build_heap(xs)
    assert validate(heap)
    assert heap.preorder()[0] == 1


def test_tree_sorts_by_name():
    for name in (C.ALGO_TREE_FF, C.ALGO_TREE_FU, C.ALGO_TREE_UF, C.ALGO_TREE_UU):
        assert plain(tree_sorts(name, elist([2, 1, 3]))) == [1, 2, 3]
    with pytest.raises(ValueError):
        tree_sorts(HEAP_FF, elist([]))


def test_algorithm_ids():
    assert [a.name for a in ALL_ALGORITHMS] == list(C.ALGO_NAMES)
    assert AlgorithmId.parse("tree-uf") is TREE_UF
    assert str(TREE_UF) == "tree-uf"
    with pytest.raises(ValueError):
        AlgorithmId.parse("bogo")


# ── step counts ──────────────────────────────────────────────────────────
@pytest.mark.parametrize("n", [0, 1, 5, 30])
def test_selection_measure(n):
    with counting() as counts:
        select_sort(elist(range(n, 0, -1)))
    assert counts["unfold_olist.apply"] == n + 1


@pytest.mark.parametrize("n", [0, 1, 5, 30])
def test_quicksort_build_makes_n_nodes(n):
    with counting() as counts:
        build_tree_unfold(elist([(7 * i) % 11 for i in range(n)]))
    assert counts["unfold_stree.node"] == n
    assert counts["unfold_stree.apply"] == 2 * n + 1


@pytest.mark.parametrize("n", [1, 10, 100])
def test_insertion_returns_early_on_sorted_input(n):
    with counting() as ascending:
        insert_sort(elist(range(n)))
    with counting() as descending:
        insert_sort(elist(range(n, 0, -1)))
    assert ascending["swap"] == n + 1
    assert descending["swap"] == 1 + n * (n + 1) // 2
    assert descending["swap"] >= n * (n - 1) // 2


def test_counts_are_deterministic():
    def run():
        with counting() as counts:
            heap_sort(elist([4, 8, 1, 1, 0, 7]))
        return dict(counts)

    assert run() == run()


@pytest.mark.parametrize("n", [256, 512])
def test_heap_flatten_stays_n_log_n(n):
    values = np.random.default_rng(n).integers(-C.VALUE_BOUND, C.VALUE_BOUND + 1, size=n).tolist()
    with counting() as counts:
        heap_sort(elist(values))
    assert counts["heap_blend"] <= 4 * n * math.log2(n)
