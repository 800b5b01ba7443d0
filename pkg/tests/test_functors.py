import pytest
from hypothesis import given
from hypothesis import strategies as st

from lawsort.algorithms import build_heap, build_tree_fold, build_tree_unfold, stree_insert
from lawsort.core.errors import EvidenceViolation, IndexMismatch
from lawsort.core.mode import Mode, build_mode
from lawsort.core.multiset import EMPTY, Multiset
from lawsort.functors import (
    EMPTY_HEAP,
    EMPTY_OLIST,
    EMPTY_STREE,
    NIL,
    Cons,
    EList,
    Heap,
    HNode,
    Indexed,
    Left,
    OCons,
    OList,
    Right,
    SNode,
    STree,
    either,
    elist,
    fanout,
    in_heap,
    in_list,
    in_olist,
    in_stree,
    index_of,
    map_step,
    mk_ocons,
    mk_snode,
    olist,
    olist_to_plain,
    out_heap,
    out_list,
    out_olist,
    out_stree,
    step_index,
    validate,
)


def test_elist_carries_its_elements():
    xs = elist([3, 1, 3])
    assert list(xs) == [3, 1, 3]
    assert xs.index == Multiset([1, 3, 3])
    assert len(xs) == 3
    assert repr(xs) == "EList([3, 1, 3])"


def test_olist_rejects_unsorted_input_in_checked_mode():
    with pytest.raises(EvidenceViolation):
        olist([2, 1])


def test_trusted_mode_builds_anything_but_validate_notices():
    with build_mode(Mode.TRUSTED):
        bad = olist([2, 1])
    assert olist_to_plain(bad) == [2, 1]
    assert not validate(bad)
    assert validate(olist([1, 2, 2]))


def test_stale_cached_index_is_caught():
    tail = olist([5])
    with pytest.raises(IndexMismatch):
        in_olist(OCons(1, tail, Multiset([5, 6])))


def test_evidence_on_search_tree_layers():
    one = stree_insert(1, EMPTY_STREE)
    with pytest.raises(EvidenceViolation):
        mk_snode(one, 0, EMPTY_STREE)
    with pytest.raises(EvidenceViolation):
        in_stree(SNode(one, 0, EMPTY_STREE, one.index, EMPTY))
    assert mk_snode(one, 1, EMPTY_STREE).pivot == 1


def test_index_of_reads_through_wrappers_and_pairs():
    xs = olist([1, 2])
    assert index_of(Left(xs)) == xs.index
    assert index_of(Right(Cons(0, xs))) == Multiset([0, 1, 2])
    assert index_of((xs, out_olist(xs))) == xs.index
    assert index_of(Indexed("anything", Multiset([7]))) == Multiset([7])
    with pytest.raises(TypeError):
        index_of(42)


def test_step_index():
    assert step_index(NIL) == EMPTY
    assert step_index(OCons(1, None, Multiset([2]))) == Multiset([1, 2])
    assert step_index(SNode(None, 2, None, Multiset([1]), Multiset([3]))) == Multiset([1, 2, 3])


def test_either_and_fanout():
    f = either(lambda a: ("left", a), lambda b: ("right", b))
    assert f(Left(1)) == ("left", 1)
    assert f(Right(2)) == ("right", 2)
    with pytest.raises(TypeError):
        f(3)
    assert fanout(len, sum)([1, 2]) == (2, 3)


def test_map_step_keeps_cached_indices_honest():
    xs = olist([2, 3])
    step = mk_ocons(1, xs)
    assert map_step(lambda t: t, step) == step
    with pytest.raises(EvidenceViolation):
        map_step(lambda t: olist([9]), step)


def test_carrier_equality_is_structural():
    assert olist([1, 2]) == olist([1, 2])
    assert olist([1, 2]) != olist([1, 3])
    assert elist([1]) != olist([1])
    assert EMPTY_OLIST == in_olist(NIL)


def test_tree_rendering():
    t = build_tree_unfold(elist([2, 1, 3]))
    assert repr(t) == "STree(((. 1 .) 2 (. 3 .)))"
    assert t.inorder() == [1, 2, 3]


def test_deep_structures_need_no_recursion():
    n = 20_000
    xs = elist(range(n))
    assert sum(1 for _ in xs) == n
    ys = olist(range(n))
    assert validate(ys)
    assert ys == olist(range(n))
    assert isinstance(xs, EList)


# ── validate on forged carriers ──────────────────────────────────────────
def test_forged_left_index_fails_validation():
    forged = STree(SNode(EMPTY_STREE, 1, EMPTY_STREE, Multiset([9]), EMPTY), Multiset([1, 9]))
    assert not validate(forged)


def test_heap_order_violation_fails_validation():
    one = Heap(HNode(EMPTY_HEAP, 1, EMPTY_HEAP, EMPTY, EMPTY), Multiset([1]))
    bad = Heap(HNode(one, 5, EMPTY_HEAP, one.index, EMPTY), Multiset([1, 5]))
    assert validate(one)
    assert not validate(bad)


def test_list_layers_inside_an_ordered_list_fail_validation():
    inner = OList(Cons(1, EMPTY_OLIST), Multiset([1]))
    assert not validate(OList(Cons(2, inner), Multiset([1, 2])))


def test_tree_layers_inside_a_heap_fail_validation():
    one = Heap(SNode(EMPTY_HEAP, 1, EMPTY_HEAP, EMPTY, EMPTY), Multiset([1]))
    assert not validate(one)
    assert not validate(Heap(SNode(one, 5, EMPTY_HEAP, one.index, EMPTY), Multiset([1, 5])))
    assert not validate(STree(HNode(EMPTY_STREE, 1, EMPTY_STREE, EMPTY, EMPTY), Multiset([1])))
    assert not validate(EList(OCons(1, EMPTY_OLIST, EMPTY), Multiset([1])))


# ── in / out and the functor law ─────────────────────────────────────────
small_ints = st.lists(st.integers(-20, 20), max_size=12)


@given(xs=small_ints)
def test_in_out_round_trips(xs):
    e = elist(xs)
    o = olist(sorted(xs))
    t = build_tree_fold(e)
    h = build_heap(e)
    assert in_list(out_list(e)) == e
    assert in_olist(out_olist(o)) == o
    assert in_stree(out_stree(t)) == t
    assert in_heap(out_heap(h)) == h


@given(xs=small_ints)
def test_map_step_preserves_composition(xs):
    e = elist(xs)
    steps = [out_list(e), out_olist(olist(sorted(xs))),
             out_stree(build_tree_fold(e)), out_heap(build_heap(e))]

    def f(c):
        return ("seen", c)

    def g(p):
        return Left(p)

    for s in steps:
        assert map_step(lambda c: g(f(c)), s) == map_step(g, map_step(f, s))
