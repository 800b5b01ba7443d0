"""
steps.py
--------
One non-recursive layer of each datatype (the base functors L, O, S, H and
Cons), the Either used at early-return positions, and the index map of a step.

Recursive positions (``tail``, ``left``, ``right``) hold whatever the caller
puts there: carriers, seeds, (subterm, view) pairs, Left/Right wrappers.
O/S/H layers cache the multiset index of each child, so the ordering bound a
layer promises can be re-checked in O(log n).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, TypeVar, Union

from ..core import mode
from ..core.errors import EvidenceViolation
from ..core.multiset import EMPTY, Multiset
from ..core.order import Bound, bound_check

A = TypeVar("A")
B = TypeVar("B")
R = TypeVar("R")


# ── Either (early return vs. continue) ───────────────────────────────────
@dataclass(frozen=True, slots=True)
class Left(Generic[A]):
    value: A


@dataclass(frozen=True, slots=True)
class Right(Generic[B]):
    value: B


Either = Union[Left[A], Right[B]]


def either(on_left: Callable[[Any], Any], on_right: Callable[[Any], Any]) -> Callable[[Any], Any]:
    """Cotupling ``[f, g]``."""
    def aux(e):
        match e:
            case Left(a):
                return on_left(a)
            case Right(b):
                return on_right(b)
        raise TypeError(f"expected Left or Right, got {type(e).__name__}")
    return aux


def fanout(f: Callable[[Any], Any], g: Callable[[Any], Any]) -> Callable[[Any], tuple]:
    """Tupling ``<f, g>``."""
    return lambda x: (f(x), g(x))


def identity(x: Any) -> Any:
    return x


# ── list-shaped layers ───────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class Nil:
    pass


@dataclass(frozen=True, slots=True)
class Cons(Generic[R]):
    head: Any
    tail: R


@dataclass(frozen=True, slots=True)
class OCons(Generic[R]):
    head: Any
    tail: R
    tail_index: Multiset


# ── tree-shaped layers ───────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class Leaf:
    pass


@dataclass(frozen=True, slots=True)
class SNode(Generic[R]):
    """Search-tree layer: left <= pivot <= right."""
    left: R
    pivot: Any
    right: R
    left_index: Multiset
    right_index: Multiset


@dataclass(frozen=True, slots=True)
class HNode(Generic[R]):
    """Heap layer: root <= every element of both children."""
    left: R
    root: Any
    right: R
    left_index: Multiset
    right_index: Multiset


NIL = Nil()
LEAF = Leaf()

LStep = Union[Nil, Cons[R]]
OStep = Union[Nil, OCons[R]]
SStep = Union[Leaf, SNode[R]]
HStep = Union[Leaf, HNode[R]]


@dataclass(frozen=True, slots=True)
class Indexed(Generic[A]):
    """A value paired with the multiset index it claims."""
    value: A
    index: Multiset


# ── index map ────────────────────────────────────────────────────────────
def index_of(x: Any) -> Multiset:
    """Multiset index of something sitting in a recursive position."""
    match x:
        case Left(v) | Right(v):
            return index_of(v)
        case tuple():
            # (subterm, view) pairs from <id, out> / para: the view carries the index
            return index_of(x[-1])
        case Nil() | Cons() | OCons() | Leaf() | SNode() | HNode():
            return step_index(x)
    index = getattr(x, "index", None)
    if isinstance(index, Multiset):
        return index
    raise TypeError(f"cannot read a multiset index off {type(x).__name__}")


def _known_index(x: Any) -> Optional[Multiset]:
    try:
        return index_of(x)
    except TypeError:
        return None


def step_index(step: Any) -> Multiset:
    match step:
        case Nil() | Leaf():
            return EMPTY
        case Cons(head, tail):
            return index_of(tail).insert(head)
        case OCons(head, _, tail_index):
            return tail_index.insert(head)
        case SNode(_, x, _, li, ri) | HNode(_, x, _, li, ri):
            return li.union(ri).insert(x)
    raise TypeError(f"not a step: {type(step).__name__}")


# ── evidence ─────────────────────────────────────────────────────────────
def evidence_holds(step: Any) -> bool:
    match step:
        case OCons(head, _, ti):
            return bound_check(Bound.BELOW, head, ti)
        case SNode(_, x, _, li, ri):
            return bound_check(Bound.ABOVE, x, li) and bound_check(Bound.BELOW, x, ri)
        case HNode(_, x, _, li, ri):
            return bound_check(Bound.BELOW, x, li) and bound_check(Bound.BELOW, x, ri)
    return True


def require_evidence(step: Any) -> Any:
    """Return ``step`` unchanged, raising EvidenceViolation in checked mode if its bounds fail."""
    if mode.is_checked() and not evidence_holds(step):
        raise EvidenceViolation(f"ordering evidence fails for {_describe(step)}")
    return step


def _describe(step: Any) -> str:
    match step:
        case OCons(head, _, ti):
            return f"OCons(head={head!r}, tail_index={ti!r})"
        case SNode(_, x, _, li, ri):
            return f"SNode(pivot={x!r}, left_index={li!r}, right_index={ri!r})"
        case HNode(_, x, _, li, ri):
            return f"HNode(root={x!r}, left_index={li!r}, right_index={ri!r})"
    return type(step).__name__


# ── smart constructors ───────────────────────────────────────────────────
def mk_ocons(x: Any, tail: R, tail_index: Optional[Multiset] = None) -> OCons[R]:
    if tail_index is None:
        tail_index = index_of(tail)
    return require_evidence(OCons(x, tail, tail_index))


def mk_snode(left: R, pivot: Any, right: R,
             left_index: Optional[Multiset] = None,
             right_index: Optional[Multiset] = None) -> SNode[R]:
    li = index_of(left) if left_index is None else left_index
    ri = index_of(right) if right_index is None else right_index
    return require_evidence(SNode(left, pivot, right, li, ri))


def mk_hnode(left: R, root: Any, right: R,
             left_index: Optional[Multiset] = None,
             right_index: Optional[Multiset] = None) -> HNode[R]:
    li = index_of(left) if left_index is None else left_index
    ri = index_of(right) if right_index is None else right_index
    return require_evidence(HNode(left, root, right, li, ri))


# ── functor actions L1 / O1 / S1 / H1 ────────────────────────────────────
def _mapped(f: Callable[[Any], Any], child: Any, cached: Multiset) -> Any:
    new = f(child)
    if mode.is_checked():
        got = _known_index(new)
        if got is not None and got != cached:
            raise EvidenceViolation(
                f"mapped child has index {got!r}, but the layer's evidence was stated for {cached!r}"
            )
    return new


def map_step(f: Callable[[Any], Any], step: Any) -> Any:
    """Apply ``f`` at every recursive position of one layer."""
    match step:
        case Nil() | Leaf():
            return step
        case Cons(head, tail):
            return Cons(head, f(tail))
        case OCons(head, tail, ti):
            return OCons(head, _mapped(f, tail, ti), ti)
        case SNode(left, x, right, li, ri):
            return SNode(_mapped(f, left, li), x, _mapped(f, right, ri), li, ri)
        case HNode(left, x, right, li, ri):
            return HNode(_mapped(f, left, li), x, _mapped(f, right, ri), li, ri)
    raise TypeError(f"not a step: {type(step).__name__}")
