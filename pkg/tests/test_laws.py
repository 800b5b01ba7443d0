import pytest
from hypothesis import given
from hypothesis import strategies as st

from lawsort.algorithms import build_heap, build_tree_fold, delete_min_step, heap_insert, stree_insert
from lawsort.core.errors import EvidenceViolation
from lawsort.core.instrument import counting
from lawsort.core.multiset import EMPTY, Multiset
from lawsort.functors import (
    EMPTY_HEAP,
    EMPTY_STREE,
    LEAF,
    NIL,
    Cons,
    HNode,
    Left,
    OCons,
    Right,
    SNode,
    elist,
    evidence_holds,
    olist,
    step_index,
)
from lawsort.laws import Pair, heap_blend, heap_sift, merge, sprout, swap, wither

ints = st.integers(-20, 20)
int_lists = st.lists(ints, max_size=15)


# ── swap ─────────────────────────────────────────────────────────────────
def test_swap_nil():
    assert swap(NIL) == NIL


def test_swap_keeps_smaller_head_and_returns_early():
    r = olist([2, 3])
    assert swap(Cons(1, (r, r.layer))) == OCons(1, Left(r), Multiset([2, 3]))


def test_swap_emits_tail_head_and_continues():
    r = olist([1, 3])
    rest = r.layer.tail
    assert swap(Cons(2, (r, r.layer))) == OCons(1, Right(Cons(2, rest)), Multiset([2, 3]))


def test_swap_into_empty():
    empty = olist([])
    assert swap(Cons(4, (empty, NIL))) == OCons(4, Left(empty), EMPTY)


def test_swap_ties_keep_the_incoming_element_first():
    r = olist([2])
    out = swap(Cons(2, (r, r.layer)))
    assert isinstance(out.tail, Left)


def test_swap_rejects_an_invalid_view():
    bad_view = OCons(5, None, Multiset([1]))
    with pytest.raises(EvidenceViolation):
        swap(Cons(9, (None, bad_view)))


def test_laws_tick_their_name():
    with counting() as counts:
        swap(NIL)
        sprout(NIL)
        wither(LEAF)
    assert counts == {"swap": 1, "sprout": 1, "wither": 1}


# ── sprout / wither ──────────────────────────────────────────────────────
def test_sprout_nil():
    assert sprout(NIL) == LEAF


def test_sprout_into_leaf():
    assert sprout(Cons(5, (EMPTY_STREE, LEAF))) == SNode(Right(NIL), 5, Right(NIL), EMPTY, EMPTY)


def test_sprout_goes_left_of_a_bigger_pivot():
    t = stree_insert(4, EMPTY_STREE)
    l, r = t.layer.left, t.layer.right
    assert sprout(Cons(1, (t, t.layer))) == SNode(Right(Cons(1, l)), 4, Left(r), Multiset([1]), EMPTY)


def test_sprout_goes_right_of_a_smaller_pivot():
    t = stree_insert(4, EMPTY_STREE)
    l, r = t.layer.left, t.layer.right
    assert sprout(Cons(6, (t, t.layer))) == SNode(Left(l), 4, Right(Cons(6, r)), EMPTY, Multiset([6]))


def test_wither_leaf():
    assert wither(LEAF) == NIL


def test_wither_with_empty_left_emits_the_pivot():
    r = stree_insert(7, EMPTY_STREE)
    node = SNode((EMPTY_STREE, NIL), 2, (r, delete_min_step(r)), EMPTY, r.index)
    assert wither(node) == OCons(2, Left(r), r.index)


def test_wither_pulls_the_minimum_out_of_the_left():
    l = stree_insert(1, EMPTY_STREE)
    r = stree_insert(6, EMPTY_STREE)
    node = SNode((l, delete_min_step(l)), 4, (r, delete_min_step(r)), l.index, r.index)
    expected = OCons(1, Right(SNode(EMPTY_STREE, 4, r, EMPTY, r.index)), Multiset([4, 6]))
    assert wither(node) == expected


# ── heaps ────────────────────────────────────────────────────────────────
def test_sift_into_empty_heap():
    assert heap_sift(Cons(3, (EMPTY_HEAP, LEAF))) == HNode(Right(NIL), 3, Right(NIL), EMPTY, EMPTY)


def test_sift_smaller_element_becomes_root():
    h = heap_insert(2, EMPTY_HEAP)
    out = heap_sift(Cons(1, (h, h.layer)))
    assert out.root == 1
    assert out.right == Right(Cons(2, h.layer.left))
    assert out.right_index == Multiset([2])


def test_sift_larger_element_is_pushed_down():
    h = heap_insert(2, EMPTY_HEAP)
    out = heap_sift(Cons(8, (h, h.layer)))
    assert out.root == 2
    assert out.right == Right(Cons(8, h.layer.left))


def test_blend_emits_the_smaller_root():
    h1 = build_heap(elist([2, 9]))
    h2 = build_heap(elist([5, 6]))
    out = heap_blend(Pair(h1, h2))
    assert out.root == 2
    assert step_index(out) == Multiset([2, 5, 6, 9])
    assert heap_blend(Pair(h2, h1)).root == 2


def test_blend_continues_on_the_left():
    h1 = build_heap(elist([1, 7, 3]))
    h2 = build_heap(elist([4]))
    l1, r1 = h1.layer.left, h1.layer.right
    out = heap_blend(Pair(h1, h2))
    assert out.left == Right(Pair(r1, h2))
    assert out.right == Left(l1)
    assert out.left_index == r1.index.union(h2.index)
    assert out.right_index == l1.index


def test_blend_of_two_empty_heaps():
    assert heap_blend(Pair(EMPTY_HEAP, EMPTY_HEAP)) == LEAF


def test_merge_steps():
    xs, ys = olist([1, 4]), olist([2])
    out = merge(Pair(xs, ys))
    assert out.head == 1
    assert out.tail == Right(Pair(xs.layer.tail, ys))
    assert merge(Pair(olist([]), ys)) == OCons(2, Left(ys.layer.tail), EMPTY)
    assert merge(Pair(olist([]), olist([]))) == NIL


# ── index preservation and evidence on random inputs ─────────────────────
@given(ints, int_lists)
def test_swap_preserves_index(a, xs):
    r = olist(sorted(xs))
    s = Cons(a, (r, r.layer))
    out = swap(s)
    assert step_index(out) == step_index(s)
    assert evidence_holds(out)


@given(ints, int_lists)
def test_sprout_preserves_index(a, xs):
    t = build_tree_fold(elist(xs))
    s = Cons(a, (t, t.layer))
    out = sprout(s)
    assert step_index(out) == step_index(s)
    assert evidence_holds(out)


@given(int_lists.filter(bool))
def test_wither_preserves_index_and_emits_the_minimum(xs):
    t = build_tree_fold(elist(xs))
    node = t.layer
    s = SNode((node.left, delete_min_step(node.left)), node.pivot,
              (node.right, delete_min_step(node.right)), node.left_index, node.right_index)
    out = wither(s)
    assert step_index(out) == t.index
    assert out.head == min(xs)


@given(ints, int_lists)
def test_heap_sift_preserves_index(a, xs):
    h = build_heap(elist(xs))
    s = Cons(a, (h, h.layer))
    out = heap_sift(s)
    assert step_index(out) == step_index(s)
    assert evidence_holds(out)


@given(int_lists, int_lists)
def test_blend_and_merge_preserve_index(xs, ys):
    hp = Pair(build_heap(elist(xs)), build_heap(elist(ys)))
    assert step_index(heap_blend(hp)) == hp.index
    op = Pair(olist(sorted(xs)), olist(sorted(ys)))
    assert step_index(merge(op)) == op.index
