"""Total order on elements and the bound predicates standing in for `All`."""
from __future__ import annotations

import enum
from typing import Any, Protocol, TypeVar

from .multiset import Multiset


class Comparable(Protocol):
    def __lt__(self, other: Any) -> bool: ...
    def __le__(self, other: Any) -> bool: ...


Element = TypeVar("Element", bound=Comparable)


class LeqWitness(enum.Enum):
    """Which side of ``(a <= b) or (b <= a)`` holds."""
    LEFT_LEQ = "a<=b"
    RIGHT_LEQ = "b<=a"


class Bound(enum.Enum):
    BELOW = "below"     # x <= every element
    ABOVE = "above"     # every element <= x


def compare_total(a: Element, b: Element) -> LeqWitness:
    """Decide the order of two elements; ties resolve to LEFT_LEQ."""
    return LeqWitness.LEFT_LEQ if a <= b else LeqWitness.RIGHT_LEQ


def leq(a: Element, b: Element) -> bool:
    return compare_total(a, b) is LeqWitness.LEFT_LEQ


def bound_check(direction: Bound, x: Element, m: Multiset) -> bool:
    """True iff x bounds every element of m from below (BELOW) or above (ABOVE).

    Comparing against the least (greatest) element is enough by transitivity.
    """
    if not m:
        return True
    if direction is Bound.BELOW:
        return x <= m.min()
    return m.max() <= x
