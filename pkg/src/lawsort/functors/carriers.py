"""
carriers.py
-----------
The recursive datatypes: element lists (EList), ordered lists (OList),
search trees (STree) and heaps (Heap).

Each carrier value is one step layer whose recursive positions are carriers
again, plus the total multiset index of its contents.  ``in_*`` assembles a
carrier from a layer (validating in checked mode), ``out_*`` exposes the top
layer.  Long lists and degenerate trees are thousands of layers deep, so every
whole-structure walk here is iterative.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, List, Union

from ..core import mode
from ..core.errors import EvidenceViolation, IndexMismatch
from ..core.multiset import EMPTY, Multiset
from .steps import (
    LEAF,
    NIL,
    Cons,
    HNode,
    HStep,
    Leaf,
    LStep,
    Nil,
    OCons,
    OStep,
    SNode,
    SStep,
    evidence_holds,
    step_index,
)

log = logging.getLogger(__name__)


class _Carrier:
    __slots__ = ()

    def __len__(self) -> int:
        return self.index.size

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return _same_shape(self, other)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class EList(_Carrier):
    """Arbitrary finite list indexed by its elements."""
    layer: LStep["EList"]
    index: Multiset

    def __iter__(self) -> Iterator[Any]:
        return _walk_list(self)

    def __repr__(self) -> str:
        return f"EList({list(self)!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class OList(_Carrier):
    """Ordered list; every OCons layer bounds its tail from below."""
    layer: OStep["OList"]
    index: Multiset

    def __iter__(self) -> Iterator[Any]:
        return _walk_list(self)

    def __repr__(self) -> str:
        return f"OList({list(self)!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class STree(_Carrier):
    """Binary search tree (unbalanced)."""
    layer: SStep["STree"]
    index: Multiset

    def inorder(self) -> List[Any]:
        return _inorder(self)

    def __repr__(self) -> str:
        return f"STree({_render(self)})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Heap(_Carrier):
    """Binary min-heap; Braun-shaped when grown by heap_sift."""
    layer: HStep["Heap"]
    index: Multiset

    def preorder(self) -> List[Any]:
        out, stack = [], [self]
        while stack:
            match stack.pop().layer:
                case HNode(left, root, right, _, _):
                    out.append(root)
                    stack.append(right)
                    stack.append(left)
        return out

    def __repr__(self) -> str:
        return f"Heap({_render(self)})"


EMPTY_ELIST = EList(NIL, EMPTY)
EMPTY_OLIST = OList(NIL, EMPTY)
EMPTY_STREE = STree(LEAF, EMPTY)
EMPTY_HEAP = Heap(LEAF, EMPTY)


# ── in / out ─────────────────────────────────────────────────────────────
def _require_child(kind: str, child: Any, cls: type, cached: Multiset) -> None:
    if not isinstance(child, cls):
        raise TypeError(f"{kind}: recursive position holds {type(child).__name__}, expected {cls.__name__}")
    if child.index != cached:
        raise IndexMismatch(f"{kind}: cached child index {cached!r} but child carries {child.index!r}")


def _check_layer(kind: str, step: Any, cls: type) -> None:
    if not mode.is_checked():
        return
    match step:
        case Cons(_, tail):
            if not isinstance(tail, cls):
                raise TypeError(f"{kind}: tail is {type(tail).__name__}, expected {cls.__name__}")
        case OCons(_, tail, ti):
            _require_child(kind, tail, cls, ti)
        case SNode(left, _, right, li, ri) | HNode(left, _, right, li, ri):
            _require_child(kind, left, cls, li)
            _require_child(kind, right, cls, ri)
    if not evidence_holds(step):
        log.debug("%s rejected a layer with failing evidence: %r", kind, step)
        raise EvidenceViolation(f"{kind}: ordering evidence fails for {type(step).__name__} "
                                f"with element {_element_of(step)!r}")


def _element_of(step: Any) -> Any:
    match step:
        case Cons(x, _) | OCons(x, _, _) | SNode(_, x, _, _, _) | HNode(_, x, _, _, _):
            return x
    return None


def _expect(kind: str, step: Any, allowed: tuple) -> None:
    if not isinstance(step, allowed):
        raise TypeError(f"{kind}: {type(step).__name__} is not a layer of this carrier")


def in_list(step: LStep[EList]) -> EList:
    _expect("in_list", step, (Nil, Cons))
    _check_layer("in_list", step, EList)
    return EList(step, step_index(step))


def out_list(xs: EList) -> LStep[EList]:
    return xs.layer


def in_olist(step: OStep[OList]) -> OList:
    _expect("in_olist", step, (Nil, OCons))
    _check_layer("in_olist", step, OList)
    return OList(step, step_index(step))


def out_olist(xs: OList) -> OStep[OList]:
    return xs.layer


def in_stree(step: SStep[STree]) -> STree:
    _expect("in_stree", step, (Leaf, SNode))
    _check_layer("in_stree", step, STree)
    return STree(step, step_index(step))


def out_stree(t: STree) -> SStep[STree]:
    return t.layer


def in_heap(step: HStep[Heap]) -> Heap:
    _expect("in_heap", step, (Leaf, HNode))
    _check_layer("in_heap", step, Heap)
    return Heap(step, step_index(step))


def out_heap(h: Heap) -> HStep[Heap]:
    return h.layer


# ── conversions ──────────────────────────────────────────────────────────
def elist(xs: Iterable[Any]) -> EList:
    """Build an EList from a plain sequence."""
    cell = EMPTY_ELIST
    for x in reversed(list(xs)):
        cell = EList(Cons(x, cell), cell.index.insert(x))
    return cell


def olist(xs: Iterable[Any]) -> OList:
    """Build an OList from an already nondecreasing sequence (checked in checked mode)."""
    cell = EMPTY_OLIST
    for x in reversed(list(xs)):
        cell = in_olist(OCons(x, cell, cell.index))
    return cell


def olist_to_plain(xs: OList) -> List[Any]:
    """Strip evidence and index, leaving the element sequence."""
    return list(_walk_list(xs))


def _walk_list(xs: Union[EList, OList]) -> Iterator[Any]:
    layer = xs.layer
    while True:
        match layer:
            case Cons(head, tail) | OCons(head, tail, _):
                yield head
                layer = tail.layer
            case _:
                return


def _inorder(t: STree) -> List[Any]:
    out: List[Any] = []
    stack: List[Any] = []
    node = t
    while stack or isinstance(node.layer, SNode):
        while isinstance(node.layer, SNode):
            stack.append(node)
            node = node.layer.left
        node = stack.pop()
        out.append(node.layer.pivot)
        node = node.layer.right
    return out


def _render(t: Union[STree, Heap]) -> str:
    """Parenthesised shape, e.g. ``((. 1 .) 2 (. 3 .))``; ``.`` is a leaf."""
    parts: List[str] = []
    stack: List[Any] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        match item.layer:
            case SNode(left, x, right, _, _) | HNode(left, x, right, _, _):
                stack.extend([")", right, f" {x!r} ", left, "("])
            case _:
                parts.append(".")
    return "".join(parts)


def _same_shape(a: Any, b: Any) -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if type(x) is not type(y) or x.index != y.index:
            return False
        match x.layer, y.layer:
            case (Nil(), Nil()) | (Leaf(), Leaf()):
                pass
            case (Cons(h1, t1), Cons(h2, t2)):
                if not h1 == h2:
                    return False
                stack.append((t1, t2))
            case (OCons(h1, t1, i1), OCons(h2, t2, i2)):
                if not h1 == h2 or i1 != i2:
                    return False
                stack.append((t1, t2))
            case (SNode(l1, x1, r1, li1, ri1), SNode(l2, x2, r2, li2, ri2)) | \
                 (HNode(l1, x1, r1, li1, ri1), HNode(l2, x2, r2, li2, ri2)):
                if not x1 == x2 or li1 != li2 or ri1 != ri2:
                    return False
                stack.append((l1, l2))
                stack.append((r1, r2))
            case _:
                return False
    return True


# ── deep validation ──────────────────────────────────────────────────────
_LAYERS = {
    EList: (Nil, Cons),
    OList: (Nil, OCons),
    STree: (Leaf, SNode),
    Heap: (Leaf, HNode),
}


def validate(carrier: Union[EList, OList, STree, Heap]) -> bool:
    """Re-check every layer's evidence and every stored index, whatever the build mode."""
    cls = type(carrier)
    allowed = _LAYERS.get(cls)
    if allowed is None:
        return False
    stack = [carrier]
    while stack:
        c = stack.pop()
        if type(c) is not cls:
            return False
        step = c.layer
        if not isinstance(step, allowed):
            return False
        match step:
            case Nil() | Leaf():
                if c.index != EMPTY:
                    return False
                continue
            case Cons(head, tail):
                if not isinstance(tail, cls) or c.index != tail.index.insert(head):
                    return False
                stack.append(tail)
                continue
            case OCons(_, tail, ti):
                children = [(tail, ti)]
            case SNode(left, _, right, li, ri) | HNode(left, _, right, li, ri):
                children = [(left, li), (right, ri)]
            case _:
                return False
        if not evidence_holds(step):
            return False
        for child, cached in children:
            if not isinstance(child, cls) or child.index != cached:
                return False
            stack.append(child)
        if c.index != step_index(step):
            return False
    return True
