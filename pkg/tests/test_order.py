from hypothesis import given
from hypothesis import strategies as st

from lawsort.core.multiset import EMPTY, Multiset
from lawsort.core.order import Bound, LeqWitness, bound_check, compare_total, leq


def test_ties_resolve_left():
    assert compare_total(1, 1) is LeqWitness.LEFT_LEQ
    assert compare_total(1, 2) is LeqWitness.LEFT_LEQ
    assert compare_total(2, 1) is LeqWitness.RIGHT_LEQ
    assert leq(3, 3) and not leq(4, 3)


def test_bounds_on_empty_hold_vacuously():
    assert bound_check(Bound.BELOW, 10**9, EMPTY)
    assert bound_check(Bound.ABOVE, -10**9, EMPTY)


def test_bounds():
    m = Multiset([3, 5, 5])
    assert bound_check(Bound.BELOW, 3, m)
    assert not bound_check(Bound.BELOW, 4, m)
    assert bound_check(Bound.ABOVE, 5, m)
    assert not bound_check(Bound.ABOVE, 4, m)


ints = st.integers(-50, 50)
gaps = st.integers(0, 20)


@given(b=ints, gap=gaps, offsets=st.lists(gaps, max_size=10))
def test_bound_weakens_to_a_smaller_element(b, gap, offsets):
    a, m = b - gap, Multiset(b + o for o in offsets)
    assert bound_check(Bound.BELOW, b, m)
    assert bound_check(Bound.BELOW, a, m)


@given(b=ints, gap=gaps, offsets=st.lists(gaps, max_size=10))
def test_bound_survives_prepending_the_larger_element(b, gap, offsets):
    a, m = b - gap, Multiset(b + o for o in offsets)
    assert bound_check(Bound.BELOW, a, m.insert(b))


def test_spelled_out_bounds():
    assert bound_check(Bound.BELOW, 0, Multiset([1, 2]))
    assert not bound_check(Bound.BELOW, 3, Multiset([2, 9]))
