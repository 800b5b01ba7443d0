import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.strategies import permutations

from lawsort.core.multiset import (
    EMPTY,
    Multiset,
    elmts,
    ms_insert,
    ms_max,
    ms_min,
    ms_remove_one,
    ms_size,
    ms_union,
)

small_ints = st.lists(st.integers(-20, 20), max_size=40)


@given(permutations([3, 1, 2, 1, 1, 5, 0]))
def test_representation_ignores_insertion_order(perm):
    assert Multiset(perm) == Multiset([0, 1, 1, 1, 2, 3, 5])
    assert hash(Multiset(perm)) == hash(Multiset([0, 1, 1, 1, 2, 3, 5]))


@given(small_ints)
def test_size_is_the_sum_of_counts(xs):
    m = elmts(xs)
    assert ms_size(m) == len(xs) == sum(k for _, k in m.items())


@given(small_ints, small_ints)
def test_union_adds_multiplicities(xs, ys):
    assert ms_union(elmts(xs), elmts(ys)) == elmts(xs + ys)


@given(small_ints)
def test_min_and_max(xs):
    m = elmts(xs)
    assert ms_min(m) == (min(xs) if xs else None)
    assert ms_max(m) == (max(xs) if xs else None)


@given(small_ints, st.integers(-20, 20))
def test_remove_one(xs, x):
    m = elmts(xs)
    rest = ms_remove_one(x, m)
    if x in xs:
        ys = list(xs)
        ys.remove(x)
        assert rest == elmts(ys)
    else:
        assert rest is None


def test_counts_and_elements():
    m = Multiset([2, 1, 2, 2])
    assert m.count(2) == 3
    assert m.count(7) == 0
    assert 1 in m and 7 not in m
    assert list(m.elements()) == [1, 2, 2, 2]
    assert list(m.items()) == [(1, 1), (2, 3)]
    assert repr(m) == "Multiset({1: 1, 2: 3})"


def test_updates_are_persistent():
    m = Multiset([1, 2])
    bigger = ms_insert(3, m)
    assert m == Multiset([1, 2])
    assert bigger == Multiset([1, 2, 3])
    assert m.remove_one(1) == Multiset([2])
    assert m.size == 2


def test_empty():
    assert not EMPTY
    assert EMPTY.size == 0
    assert EMPTY.min() is None
    assert EMPTY.remove_one(0) is None
    assert EMPTY == Multiset() == Multiset.from_counts([])


def test_from_counts():
    assert Multiset.from_counts([(4, 2), (1, 0), (3, 1)]) == Multiset([4, 3, 4])
    with pytest.raises(ValueError):
        Multiset.from_counts([(1, -1)])
    with pytest.raises(ValueError):
        Multiset().insert(1, 0)


def test_large_multiset_stays_shallow():
    m = elmts(range(50_000))
    assert m.size == 50_000
    assert m.min() == 0 and m.max() == 49_999
