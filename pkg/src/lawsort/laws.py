"""
laws.py
-------
Distributive laws: one layer of one datatype pushed through one layer of
another.  Every sorting algorithm in `algorithms` is a scheme applied to one
of these, so the comparison logic lives here and nowhere else.

A law never recurses and never calls a scheme.  Its output children are
either finished subterms (``Left``) or one-layer continuations (``Right``).
Inputs from a (subterm, view) pairing arrive as 2-tuples.  Output layers are
built with the smart constructors, so checked mode re-derives the ordering
evidence of every layer a law emits.

Ties go through LEFT_LEQ: on equal keys the incoming element stays in front
of (or to the left of) the incumbent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Generic, Tuple, TypeVar

from .core.instrument import tick
from .core.multiset import EMPTY, Multiset
from .core.order import leq
from .functors.steps import (
    LEAF,
    NIL,
    Cons,
    Either,
    HNode,
    HStep,
    Leaf,
    Left,
    LStep,
    Nil,
    OCons,
    OStep,
    Right,
    SNode,
    SStep,
    mk_hnode,
    mk_ocons,
    mk_snode,
    require_evidence,
)

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class Pair(Generic[T]):
    """Seed of the two-structure coalgebras (heap_blend, merge).

    Its index is the union of both components' indices.
    """
    first: T
    second: T

    @property
    def index(self) -> Multiset:
        return self.first.index.union(self.second.index)


def _layer_error(law: str, step: Any) -> TypeError:
    return TypeError(f"{law}: no clause for {type(step).__name__}")


# ── lists into ordered lists ─────────────────────────────────────────────
def swap(s: LStep[Tuple[Any, OStep[Any]]]) -> OStep[Either[Any, LStep[Any]]]:
    """L (R x O R) -> O (R + L R).

    Insertion sort folds with it; selection sort unfolds with it.
    """
    tick("swap")
    match s:
        case Nil():
            return NIL
        case Cons(a, (r, Nil())):
            return mk_ocons(a, Left(r), EMPTY)
        case Cons(a, (r, OCons(b, rest, rest_index) as view)):
            require_evidence(view)
            if leq(a, b):
                return mk_ocons(a, Left(r), rest_index.insert(b))
            return mk_ocons(b, Right(Cons(a, rest)), rest_index.insert(a))
    raise _layer_error("swap", s)


# ── lists into search trees ──────────────────────────────────────────────
def sprout(s: LStep[Tuple[Any, SStep[Any]]]) -> SStep[Either[Any, LStep[Any]]]:
    """L (R x S R) -> S (R + L R): route the new element to one side of the pivot."""
    tick("sprout")
    match s:
        case Nil():
            return LEAF
        case Cons(a, (_, Leaf())):
            return mk_snode(Right(NIL), a, Right(NIL), EMPTY, EMPTY)
        case Cons(a, (_, SNode(l, b, r, li, ri) as view)):
            require_evidence(view)
            if leq(a, b):
                return mk_snode(Right(Cons(a, l)), b, Left(r), li.insert(a), ri)
            return mk_snode(Left(l), b, Right(Cons(a, r)), li, ri.insert(a))
    raise _layer_error("sprout", s)


# ── search trees into ordered lists ──────────────────────────────────────
def wither(s: SStep[Tuple[Any, OStep[Any]]]) -> OStep[Either[Any, SStep[Any]]]:
    """S (R x O R) -> O (R + S R): the least element is the left subtree's, or the pivot."""
    tick("wither")
    match s:
        case Leaf():
            return NIL
        case SNode((_, Nil()), x, (r, _), _, ri) as node:
            require_evidence(node)
            return mk_ocons(x, Left(r), ri)
        case SNode((_, OCons(m, rest, rest_index) as view), x, (r, _), _, ri) as node:
            require_evidence(node)
            require_evidence(view)
            remainder = SNode(rest, x, r, rest_index, ri)
            return mk_ocons(m, Right(remainder), rest_index.union(ri).insert(x))
    raise _layer_error("wither", s)


# ── heaps ────────────────────────────────────────────────────────────────
def heap_sift(s: LStep[Tuple[Any, HStep[Any]]]) -> HStep[Either[Any, LStep[Any]]]:
    """L (R x H R) -> H (R + L R).

    The smaller of the new element and the root stays on top; the larger is
    pushed into the old left child, which moves to the right, and the old right
    child early-returns on the left.  Alternating sides keeps the heap
    balanced (a Braun tree).
    """
    tick("heap_sift")
    match s:
        case Nil():
            return LEAF
        case Cons(a, (_, Leaf())):
            return mk_hnode(Right(NIL), a, Right(NIL), EMPTY, EMPTY)
        case Cons(a, (_, HNode(l, b, r, li, ri) as view)):
            require_evidence(view)
            top, down = (a, b) if leq(a, b) else (b, a)
            return mk_hnode(Left(r), top, Right(Cons(down, l)), ri, li.insert(down))
    raise _layer_error("heap_sift", s)


def heap_blend(seed: Pair) -> HStep[Either[Any, Pair]]:
    """Pair of heaps -> H (Heap + Pair): one layer of a heap merge.

    The smaller root is emitted.  Its left subtree early-returns into the right
    position and merging continues on the left with its right subtree and the
    other heap, so sides swap on every step as in a skew heap.
    """
    tick("heap_blend")
    h1, h2 = seed.first, seed.second
    match h1.layer, h2.layer:
        case Leaf(), Leaf():
            return LEAF
        case HNode(l, x, r, li, ri), Leaf():
            return mk_hnode(Left(l), x, Left(r), li, ri)
        case Leaf(), HNode(l, x, r, li, ri):
            return mk_hnode(Left(l), x, Left(r), li, ri)
        case HNode(l1, x1, r1, l1i, r1i), HNode(l2, x2, r2, l2i, r2i):
            if leq(x1, x2):
                return mk_hnode(Right(Pair(r1, h2)), x1, Left(l1), r1i.union(h2.index), l1i)
            return mk_hnode(Right(Pair(h1, r2)), x2, Left(l2), h1.index.union(r2i), l2i)
    raise _layer_error("heap_blend", seed)


def merge(seed: Pair) -> OStep[Either[Any, Pair]]:
    """Pair of ordered lists -> O (OList + Pair): one step of a two-way merge."""
    tick("merge")
    xs, ys = seed.first, seed.second
    match xs.layer, ys.layer:
        case Nil(), Nil():
            return NIL
        case OCons(x, t, ti), Nil():
            return mk_ocons(x, Left(t), ti)
        case Nil(), OCons(y, t, ti):
            return mk_ocons(y, Left(t), ti)
        case OCons(x, t1, i1), OCons(y, t2, i2):
            if leq(x, y):
                return mk_ocons(x, Right(Pair(t1, ys)), i1.union(ys.index))
            return mk_ocons(y, Right(Pair(xs, t2)), xs.index.union(i2))
    raise _layer_error("merge", seed)
