"""
multiset.py
-----------
Canonical finite multisets (the ghost index carried by every lawsort carrier).

A multiset is stored as a persistent treap keyed by element, each node holding
a positive count and the total count of its subtree.  Node priorities are
derived from the key alone (ties broken by key order), so a given multiset has
exactly one tree shape: insertion order never shows in the representation, and
structural equality *is* multiset equality.  Updates copy only the search path,
so the many indices cached inside a carrier share almost all of their nodes.
"""
from __future__ import annotations

from typing import Any, Iterable, Iterator, Optional, Tuple

_SALT = 0x5BD1E995


class _Node:
    __slots__ = ("key", "count", "prio", "left", "right", "size")

    def __init__(self, key: Any, count: int, prio: int,
                 left: Optional["_Node"], right: Optional["_Node"]) -> None:
        self.key = key
        self.count = count
        self.prio = prio
        self.left = left
        self.right = right
        self.size = count + (left.size if left else 0) + (right.size if right else 0)


def _priority(key: Any) -> int:
    return hash((key, _SALT))


def _above(a: _Node, b: _Node) -> bool:
    """Heap order on nodes: higher priority first, smaller key on a tie."""
    return a.prio > b.prio or (a.prio == b.prio and a.key < b.key)


def _with(node: _Node, *, count: Optional[int] = None,
          left: Any = ..., right: Any = ...) -> _Node:
    return _Node(node.key,
                 node.count if count is None else count,
                 node.prio,
                 node.left if left is ... else left,
                 node.right if right is ... else right)


def _insert(node: Optional[_Node], key: Any, k: int, prio: int) -> _Node:
    if node is None:
        return _Node(key, k, prio, None, None)
    if key < node.key:
        left = _insert(node.left, key, k, prio)
        if _above(left, node):
            return _with(left, right=_with(node, left=left.right))
        return _with(node, left=left)
    if node.key < key:
        right = _insert(node.right, key, k, prio)
        if _above(right, node):
            return _with(right, left=_with(node, right=right.left))
        return _with(node, right=right)
    return _with(node, count=node.count + k)


def _join(a: Optional[_Node], b: Optional[_Node]) -> Optional[_Node]:
    """Concatenate two treaps whose key ranges do not overlap (a before b)."""
    if a is None:
        return b
    if b is None:
        return a
    if _above(a, b):
        return _with(a, right=_join(a.right, b))
    return _with(b, left=_join(a, b.left))


def _split(node: Optional[_Node], key: Any) -> Tuple[Optional[_Node], int, Optional[_Node]]:
    if node is None:
        return None, 0, None
    if key < node.key:
        lo, c, hi = _split(node.left, key)
        return lo, c, _with(node, left=hi)
    if node.key < key:
        lo, c, hi = _split(node.right, key)
        return _with(node, right=lo), c, hi
    return node.left, node.count, node.right


def _union(a: Optional[_Node], b: Optional[_Node]) -> Optional[_Node]:
    if a is None:
        return b
    if b is None:
        return a
    if _above(b, a):
        a, b = b, a
    lo, c, hi = _split(b, a.key)
    return _Node(a.key, a.count + c, a.prio, _union(a.left, lo), _union(a.right, hi))


_MISSING = object()


def _remove_one(node: Optional[_Node], key: Any) -> Any:
    if node is None:
        return _MISSING
    if key < node.key:
        left = _remove_one(node.left, key)
        return _MISSING if left is _MISSING else _with(node, left=left)
    if node.key < key:
        right = _remove_one(node.right, key)
        return _MISSING if right is _MISSING else _with(node, right=right)
    if node.count > 1:
        return _with(node, count=node.count - 1)
    return _join(node.left, node.right)


def _same(a: Optional[_Node], b: Optional[_Node]) -> bool:
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is y:
            continue
        if x is None or y is None:
            return False
        if x.size != y.size or x.count != y.count or not (x.key == y.key):
            return False
        stack.append((x.left, y.left))
        stack.append((x.right, y.right))
    return True


class Multiset:
    """Immutable finite multiset with canonical representation."""

    __slots__ = ("_root", "_hash")

    def __init__(self, elements: Iterable[Any] = ()) -> None:
        root: Optional[_Node] = None
        for x in elements:
            root = _insert(root, x, 1, _priority(x))
        self._root = root
        self._hash: Optional[int] = None

    @classmethod
    def _of(cls, root: Optional[_Node]) -> "Multiset":
        m = cls.__new__(cls)
        m._root = root
        m._hash = None
        return m

    @classmethod
    def from_counts(cls, counts: Iterable[Tuple[Any, int]]) -> "Multiset":
        root: Optional[_Node] = None
        for key, k in counts:
            if k < 0:
                raise ValueError(f"negative count {k} for {key!r}")
            if k:
                root = _insert(root, key, k, _priority(key))
        return cls._of(root)

    # ── queries ──────────────────────────────────────────────────────────
    @property
    def size(self) -> int:
        return self._root.size if self._root else 0

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self._root is not None

    def count(self, x: Any) -> int:
        node = self._root
        while node is not None:
            if x < node.key:
                node = node.left
            elif node.key < x:
                node = node.right
            else:
                return node.count
        return 0

    def __contains__(self, x: Any) -> bool:
        return self.count(x) > 0

    def min(self) -> Optional[Any]:
        node = self._root
        if node is None:
            return None
        while node.left is not None:
            node = node.left
        return node.key

    def max(self) -> Optional[Any]:
        node = self._root
        if node is None:
            return None
        while node.right is not None:
            node = node.right
        return node.key

    def items(self) -> Iterator[Tuple[Any, int]]:
        """(element, count) pairs in element order."""
        stack: list = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.key, node.count
            node = node.right

    def elements(self) -> Iterator[Any]:
        """Every element, repeated by multiplicity, in element order."""
        for key, k in self.items():
            for _ in range(k):
                yield key

    # ── updates (all persistent) ─────────────────────────────────────────
    def insert(self, x: Any, k: int = 1) -> "Multiset":
        if k <= 0:
            raise ValueError(f"insert count must be positive, got {k}")
        return Multiset._of(_insert(self._root, x, k, _priority(x)))

    def union(self, other: "Multiset") -> "Multiset":
        if other._root is None:
            return self
        if self._root is None:
            return other
        return Multiset._of(_union(self._root, other._root))

    def remove_one(self, x: Any) -> Optional["Multiset"]:
        root = _remove_one(self._root, x)
        return None if root is _MISSING else Multiset._of(root)

    # ── dunder ───────────────────────────────────────────────────────────
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return _same(self._root, other._root)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {c}" for k, c in self.items())
        return f"Multiset({{{body}}})"


EMPTY = Multiset()


# ── functional surface ───────────────────────────────────────────────────
def ms_empty() -> Multiset:
    return EMPTY


def ms_insert(x: Any, m: Multiset) -> Multiset:
    return m.insert(x)


def ms_union(m1: Multiset, m2: Multiset) -> Multiset:
    return m1.union(m2)


def ms_remove_one(x: Any, m: Multiset) -> Optional[Multiset]:
    return m.remove_one(x)


def ms_size(m: Multiset) -> int:
    return m.size


def ms_min(m: Multiset) -> Optional[Any]:
    return m.min()


def ms_max(m: Multiset) -> Optional[Any]:
    return m.max()


def elmts(xs: Iterable[Any]) -> Multiset:
    """The multiset of a sequence's elements (a fold of multiset insertion)."""
    return Multiset(xs)
