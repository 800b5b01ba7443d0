"""
algorithms.py
-------------
The sorting algorithms and the data-structure operations they yield, each a
composition of one scheme with one law.

  insert      fold of an apomorphism over swap
  select      unfold of a paramorphism over swap
  tree-XY     build X (f: fold over sprout, treesort; u: unfold, quicksort)
              then flatten Y (f: fold over wither; u: unfold of delete_min)
  heap        fold over heap_sift, then unfold of heap_delete_min
  heap-ff     fold over heap_sift, then fold merging the children's lists
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Optional, Tuple, Union

from .core import constants as C
from .core.errors import EmptyStructure
from .core.multiset import EMPTY
from .functors.carriers import (
    EMPTY_ELIST,
    EMPTY_OLIST,
    EList,
    Heap,
    OList,
    STree,
    elist,
    in_list,
    in_olist,
    in_stree,
    out_heap,
    out_olist,
    out_stree,
)
from .functors.steps import (
    LEAF,
    NIL,
    Cons,
    HNode,
    Indexed,
    Leaf,
    Nil,
    either,
    fanout,
    identity,
    map_step,
    mk_ocons,
    mk_snode,
)
from .laws import Pair, heap_blend, heap_sift, merge, sprout, swap, wither
from .schemes import (
    apo_heap,
    apo_olist,
    apo_stree,
    fold_heap,
    fold_list,
    fold_stree,
    para_list,
    para_stree,
    unfold_olist,
    unfold_stree,
)

log = logging.getLogger(__name__)


# ── algorithm identifiers ────────────────────────────────────────────────
class Phase(enum.Enum):
    FOLD = "f"
    UNFOLD = "u"


@dataclass(frozen=True)
class AlgorithmId:
    """Which derivation to run; ``build``/``flatten`` only matter for tree and heap sorts."""
    family: str
    build: Optional[Phase] = None
    flatten: Optional[Phase] = None

    @property
    def name(self) -> str:
        if self.family == "tree":
            return f"tree-{self.build.value}{self.flatten.value}"
        if self.family == "heap":
            return "heap-ff" if self.flatten is Phase.FOLD else "heap"
        return self.family

    @classmethod
    def parse(cls, name: str) -> "AlgorithmId":
        try:
            return _BY_NAME[name]
        except KeyError:
            raise ValueError(f"unknown algorithm {name!r}; expected one of {', '.join(C.ALGO_NAMES)}") from None

    def __str__(self) -> str:
        return self.name


INSERT_SORT = AlgorithmId("insert")
SELECT_SORT = AlgorithmId("select")
TREE_FF = AlgorithmId("tree", Phase.FOLD, Phase.FOLD)
TREE_FU = AlgorithmId("tree", Phase.FOLD, Phase.UNFOLD)
TREE_UF = AlgorithmId("tree", Phase.UNFOLD, Phase.FOLD)
TREE_UU = AlgorithmId("tree", Phase.UNFOLD, Phase.UNFOLD)
HEAP_SORT = AlgorithmId("heap", Phase.FOLD, Phase.UNFOLD)
HEAP_FF = AlgorithmId("heap", Phase.FOLD, Phase.FOLD)

ALL_ALGORITHMS: Tuple[AlgorithmId, ...] = (
    INSERT_SORT, SELECT_SORT, TREE_FF, TREE_FU, TREE_UF, TREE_UU, HEAP_SORT, HEAP_FF,
)
_BY_NAME: Dict[str, AlgorithmId] = {a.name: a for a in ALL_ALGORITHMS}


# ── insertion / selection ────────────────────────────────────────────────
def _insert_coalgebra(seed: Indexed):
    return swap(map_step(fanout(identity, out_olist), seed.value))


def insert_step(step) -> OList:
    """Insert the head of a ``Cons(a, sorted)`` layer; a Nil layer gives the empty list."""
    return apo_olist(_insert_coalgebra, step)


def insert_sort(xs: EList) -> OList:
    return fold_list(insert_step, xs)


def _select_palg(step):
    return map_step(either(identity, in_list), swap(step))


def select_step(xs: EList):
    """One selection step: the least element and the list without it."""
    return para_list(_select_palg, xs)


def select_sort(xs: EList) -> OList:
    return unfold_olist(lambda seed: select_step(seed.value), Indexed(xs, xs.index))


# ── search trees ─────────────────────────────────────────────────────────
def _sprout_coalgebra(seed: Indexed):
    return sprout(map_step(fanout(identity, out_stree), seed.value))


def _grow_step(step) -> STree:
    return apo_stree(_sprout_coalgebra, step)


def build_tree_fold(xs: EList) -> STree:
    """Treesort build: insert the elements right to left."""
    return fold_list(_grow_step, xs)


def stree_insert(x: Any, t: STree) -> STree:
    return _grow_step(Cons(x, t))


def partition_step(seed: Indexed):
    match seed.value.layer:
        case Nil():
            return LEAF
        case Cons(pivot, rest):
            def palg(step):
                if isinstance(step, Nil):
                    return mk_snode(EMPTY_ELIST, pivot, EMPTY_ELIST, EMPTY, EMPTY)
                return map_step(either(identity, in_list), sprout(step))
            return para_list(palg, rest)


def build_tree_unfold(xs: EList) -> STree:
    """Quicksort build: the head is the pivot, the rest is partitioned around it."""
    return unfold_stree(partition_step, Indexed(xs, xs.index))


def _delete_min_palg(step):
    return map_step(either(identity, in_stree), wither(step))


def delete_min_step(t: STree):
    return para_stree(_delete_min_palg, t)


def delete_min(t: STree) -> Tuple[Any, STree]:
    """Remove one occurrence of the least element; raises EmptyStructure on a leaf."""
    if isinstance(out_stree(t), Leaf):
        raise EmptyStructure("delete_min: the search tree is empty")
    step = delete_min_step(t)
    return step.head, step.tail


def flatten_tree_unfold(t: STree) -> OList:
    return unfold_olist(lambda seed: delete_min_step(seed.value), Indexed(t, t.index))


def _wither_coalgebra(seed: Indexed):
    return wither(map_step(fanout(identity, out_olist), seed.value))


def flatten_tree_fold(t: STree) -> OList:
    return fold_stree(lambda step: apo_olist(_wither_coalgebra, step), t)


_TREE_BUILD: Dict[Phase, Callable[[EList], STree]] = {
    Phase.FOLD: build_tree_fold,
    Phase.UNFOLD: build_tree_unfold,
}
_TREE_FLATTEN: Dict[Phase, Callable[[STree], OList]] = {
    Phase.FOLD: flatten_tree_fold,
    Phase.UNFOLD: flatten_tree_unfold,
}


def tree_sorts(variant: Union[AlgorithmId, str], xs: EList) -> OList:
    if isinstance(variant, str):
        variant = AlgorithmId.parse(variant)
    if variant.family != "tree":
        raise ValueError(f"{variant} is not a tree sort")
    return _TREE_FLATTEN[variant.flatten](_TREE_BUILD[variant.build](xs))


# ── heaps ────────────────────────────────────────────────────────────────
def _sift_coalgebra(seed: Indexed):
    return heap_sift(map_step(fanout(identity, out_heap), seed.value))


def _heap_step(step) -> Heap:
    return apo_heap(_sift_coalgebra, step)


def build_heap(xs: EList) -> Heap:
    return fold_list(_heap_step, xs)


def heap_insert(x: Any, h: Heap) -> Heap:
    return _heap_step(Cons(x, h))


def heap_merge(h1: Heap, h2: Heap) -> Heap:
    return apo_heap(lambda seed: heap_blend(seed.value), Pair(h1, h2))


def heap_delete_min_step(h: Heap):
    match out_heap(h):
        case Leaf():
            return NIL
        case HNode(l, x, r, li, ri):
            return mk_ocons(x, heap_merge(l, r), li.union(ri))


def heap_delete_min(h: Heap) -> Tuple[Any, Heap]:
    if isinstance(out_heap(h), Leaf):
        raise EmptyStructure("heap_delete_min: the heap is empty")
    step = heap_delete_min_step(h)
    return step.head, step.tail


def flatten_heap_unfold(h: Heap) -> OList:
    return unfold_olist(lambda seed: heap_delete_min_step(seed.value), Indexed(h, h.index))


def merge_olists(xs: OList, ys: OList) -> OList:
    return apo_olist(lambda seed: merge(seed.value), Pair(xs, ys))


def _merge_children(step) -> OList:
    match step:
        case Leaf():
            return EMPTY_OLIST
        case HNode(lo, x, ro, li, ri):
            return in_olist(mk_ocons(x, merge_olists(lo, ro), li.union(ri)))


def flatten_heap_fold(h: Heap) -> OList:
    return fold_heap(_merge_children, h)


def heap_sort(xs: EList) -> OList:
    return flatten_heap_unfold(build_heap(xs))


def heap_sort_ff(xs: EList) -> OList:
    return flatten_heap_fold(build_heap(xs))


# ── dispatch ─────────────────────────────────────────────────────────────
def sort_with(algo: Union[AlgorithmId, str], xs: Union[EList, Iterable[Any]]) -> OList:
    """Run one algorithm on an EList (plain sequences are converted first)."""
    if isinstance(algo, str):
        algo = AlgorithmId.parse(algo)
    if not isinstance(xs, EList):
        xs = elist(xs)
    log.debug("sorting %d elements with %s", len(xs), algo)
    match algo.family:
        case "insert":
            return insert_sort(xs)
        case "select":
            return select_sort(xs)
        case "tree":
            return tree_sorts(algo, xs)
        case "heap":
            return heap_sort_ff(xs) if algo.flatten is Phase.FOLD else heap_sort(xs)
    raise ValueError(f"unknown algorithm family {algo.family!r}")
