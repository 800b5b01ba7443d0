"""
schemes.py
----------
Structured recursion over the carriers.

Folds and paramorphisms consume carriers bottom-up.  Unfolds and apomorphisms
grow carriers from a coalgebra; they are total because every coalgebra step
must emit an element that is removed from the seed's multiset index, so the
index size is a strictly decreasing measure.  That argument is enforced at
runtime: checked mode verifies every step against the index, and both modes
stop with FuelExhausted once the step bound implied by the initial index size
is used up.

Every scheme is a loop with an explicit stack, so inputs of 10^5 elements
never touch the interpreter's recursion limit.
"""
from __future__ import annotations

import logging
from typing import Any, Callable, List, Tuple, TypeVar

from .core import mode
from .core.errors import FuelExhausted, IndexMismatch
from .core.instrument import tick
from .functors.carriers import (
    EMPTY_ELIST,
    EMPTY_HEAP,
    EMPTY_OLIST,
    EMPTY_STREE,
    EList,
    Heap,
    OList,
    STree,
    in_heap,
    in_list,
    in_olist,
    in_stree,
)
from .functors.steps import (
    LEAF,
    NIL,
    Cons,
    HNode,
    HStep,
    Indexed,
    Leaf,
    Left,
    LStep,
    Nil,
    OCons,
    Right,
    SNode,
    SStep,
    index_of,
)

log = logging.getLogger(__name__)

X = TypeVar("X")
Coalgebra = Callable[[Indexed], Any]


def _as_indexed(seed: Any) -> Indexed:
    return seed if isinstance(seed, Indexed) else Indexed(seed, index_of(seed))


def _mismatch(scheme: str, message: str) -> IndexMismatch:
    log.debug("%s: %s", scheme, message)
    return IndexMismatch(f"{scheme}: {message}")


def _out_of_fuel(scheme: str, fuel: int) -> FuelExhausted:
    log.debug("%s: step bound %d reached", scheme, fuel)
    return FuelExhausted(f"{scheme}: coalgebra still producing after {fuel} steps "
                         f"(the seed's index allows at most {fuel})")


# ── folds / paramorphisms over lists ─────────────────────────────────────
def _cells(xs: EList) -> List[tuple]:
    cells = []
    layer = xs.layer
    while isinstance(layer, Cons):
        cells.append((layer.head, layer.tail))
        layer = layer.tail.layer
    return cells


def fold_list(alg: Callable[[LStep[X]], X], xs: EList) -> X:
    """Catamorphism: replace Nil/Cons by ``alg``, right to left."""
    acc = alg(NIL)
    for head, _ in reversed(_cells(xs)):
        acc = alg(Cons(head, acc))
    return acc


def para_list(palg: Callable[[LStep[Tuple[EList, X]]], X], xs: EList) -> X:
    """Paramorphism: each recursive position is a (subterm, result) pair."""
    acc = palg(NIL)
    for head, tail in reversed(_cells(xs)):
        acc = palg(Cons(head, (tail, acc)))
    return acc


# ── folds / paramorphisms over trees ─────────────────────────────────────
def _fold_tree(alg: Callable[[Any], X], t: Any, node_cls: type, with_subterms: bool) -> X:
    results: List[Any] = []
    stack: List[tuple] = [(t, False)]
    while stack:
        carrier, expanded = stack.pop()
        layer = carrier.layer
        if isinstance(layer, Leaf):
            results.append(alg(LEAF))
            continue
        if not isinstance(layer, node_cls):
            raise TypeError(f"unexpected layer {type(layer).__name__} in a {type(t).__name__}")
        if not expanded:
            stack.append((carrier, True))
            stack.append((layer.right, False))
            stack.append((layer.left, False))
            continue
        right = results.pop()
        left = results.pop()
        if with_subterms:
            left, right = (layer.left, left), (layer.right, right)
        results.append(alg(node_cls(left, _element(layer), right, layer.left_index, layer.right_index)))
    return results.pop()


def _element(layer: Any) -> Any:
    return layer.pivot if isinstance(layer, SNode) else layer.root


def fold_stree(alg: Callable[[SStep[X]], X], t: STree) -> X:
    return _fold_tree(alg, t, SNode, with_subterms=False)


def para_stree(palg: Callable[[SStep[Tuple[STree, X]]], X], t: STree) -> X:
    return _fold_tree(palg, t, SNode, with_subterms=True)


def fold_heap(alg: Callable[[HStep[X]], X], h: Heap) -> X:
    return _fold_tree(alg, h, HNode, with_subterms=False)


def para_heap(palg: Callable[[HStep[Tuple[Heap, X]]], X], h: Heap) -> X:
    return _fold_tree(palg, h, HNode, with_subterms=True)


# ── unfolds / apomorphisms into lists ────────────────────────────────────
def _grow_list(c: Coalgebra, seed: Any, *, scheme: str, early: bool, ordered: bool) -> Any:
    seed = _as_indexed(seed)
    checked = mode.is_checked()
    fuel = seed.index.size + 1
    spent = 0
    emitted: List[Any] = []
    current = seed
    tail = None
    while tail is None:
        if spent == fuel:
            raise _out_of_fuel(scheme, fuel)
        step = c(current)
        spent += 1
        tick(f"{scheme}.apply")
        match step:
            case Nil():
                if checked and current.index:
                    raise _mismatch(scheme, f"coalgebra stopped with {current.index!r} still to emit")
                tail = EMPTY_OLIST if ordered else EMPTY_ELIST
                break
            case OCons(head, child, claimed) if ordered:
                pass
            case Cons(head, child) if not ordered:
                claimed = None  # element lists carry no cached index; derive it
            case _:
                raise TypeError(f"{scheme}: coalgebra returned {type(step).__name__}")
        if checked or claimed is None:
            residual = current.index.remove_one(head)
        else:
            residual = claimed
        if residual is None:
            raise _mismatch(scheme, f"emitted {head!r}, which the seed's index {current.index!r} does not hold")
        if claimed is None:
            claimed = residual
        elif checked and residual != claimed:
            raise _mismatch(scheme, f"after emitting {head!r} the residual index is {residual!r}, "
                                    f"but the step claims {claimed!r}")
        emitted.append(head)
        if not early:
            current = Indexed(child, claimed)
            continue
        match child:
            case Left(done):
                if checked and (not isinstance(done, OList if ordered else EList) or done.index != claimed):
                    raise _mismatch(scheme, f"early-returned carrier does not carry the residual index {claimed!r}")
                tail = done
            case Right(next_seed):
                current = Indexed(next_seed, claimed)
            case _:
                raise TypeError(f"{scheme}: apomorphism child must be Left or Right, got {type(child).__name__}")

    result = tail
    for head in reversed(emitted):
        if ordered:
            result = in_olist(OCons(head, result, result.index))
        else:
            result = in_list(Cons(head, result))
    return result


def unfold_olist(c: Coalgebra, seed: Any) -> OList:
    """Anamorphism into ordered lists; exactly ``size(index) + 1`` coalgebra steps."""
    return _grow_list(c, seed, scheme="unfold_olist", early=False, ordered=True)


def apo_olist(c: Coalgebra, seed: Any) -> OList:
    """Apomorphism into ordered lists: ``Left`` children are spliced in as they are."""
    return _grow_list(c, seed, scheme="apo_olist", early=True, ordered=True)


def unfold_list(c: Coalgebra, seed: Any) -> EList:
    """Anamorphism into element lists (every such coalgebra is finite)."""
    return _grow_list(c, seed, scheme="unfold_list", early=False, ordered=False)


# ── unfolds / apomorphisms into trees ────────────────────────────────────
_BUILD = object()


def _grow_tree(c: Coalgebra, seed: Any, *, scheme: str, early: bool,
               node_cls: type, carrier_cls: type, build: Callable, empty: Any) -> Any:
    seed = _as_indexed(seed)
    checked = mode.is_checked()
    fuel = 2 * seed.index.size + 1
    spent = 0
    results: List[Any] = []
    stack: List[Any] = [seed]

    def schedule(child: Any, cached: Any) -> None:
        if not early:
            stack.append(Indexed(child, cached))
            return
        match child:
            case Right(next_seed):
                stack.append(Indexed(next_seed, cached))
            case Left(done):
                if checked and (not isinstance(done, carrier_cls) or done.index != cached):
                    raise _mismatch(scheme, f"early-returned subtree does not carry its cached index {cached!r}")
                stack.append(Left(done))
            case _:
                raise TypeError(f"{scheme}: apomorphism child must be Left or Right, got {type(child).__name__}")

    while stack:
        frame = stack.pop()
        if isinstance(frame, tuple) and frame[0] is _BUILD:
            right = results.pop()
            left = results.pop()
            results.append(build(node_cls(left, frame[1], right, left.index, right.index)))
            tick(f"{scheme}.node")
            continue
        if isinstance(frame, Left):
            results.append(frame.value)
            continue
        if spent == fuel:
            raise _out_of_fuel(scheme, fuel)
        step = c(frame)
        spent += 1
        tick(f"{scheme}.apply")
        if isinstance(step, Leaf):
            if checked and frame.index:
                raise _mismatch(scheme, f"coalgebra produced a leaf with {frame.index!r} still to place")
            results.append(empty)
            continue
        if not isinstance(step, node_cls):
            raise TypeError(f"{scheme}: coalgebra returned {type(step).__name__}")
        x = _element(step)
        if checked:
            residual = frame.index.remove_one(x)
            if residual is None:
                raise _mismatch(scheme, f"node element {x!r} is not in the seed's index {frame.index!r}")
            children = step.left_index.union(step.right_index)
            if residual != children:
                raise _mismatch(scheme, f"children claim {children!r} but {residual!r} remains after {x!r}")
        stack.append((_BUILD, x))
        schedule(step.right, step.right_index)
        schedule(step.left, step.left_index)
    return results.pop()


def unfold_stree(c: Coalgebra, seed: Any) -> STree:
    return _grow_tree(c, seed, scheme="unfold_stree", early=False, node_cls=SNode,
                      carrier_cls=STree, build=in_stree, empty=EMPTY_STREE)


def apo_stree(c: Coalgebra, seed: Any) -> STree:
    return _grow_tree(c, seed, scheme="apo_stree", early=True, node_cls=SNode,
                      carrier_cls=STree, build=in_stree, empty=EMPTY_STREE)


def unfold_heap(c: Coalgebra, seed: Any) -> Heap:
    return _grow_tree(c, seed, scheme="unfold_heap", early=False, node_cls=HNode,
                      carrier_cls=Heap, build=in_heap, empty=EMPTY_HEAP)


def apo_heap(c: Coalgebra, seed: Any) -> Heap:
    return _grow_tree(c, seed, scheme="apo_heap", early=True, node_cls=HNode,
                      carrier_cls=Heap, build=in_heap, empty=EMPTY_HEAP)
