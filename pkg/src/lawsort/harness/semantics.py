"""
semantics.py
------------
Exhaustive desk-scale checks that the multiset semantics behind the library
holds on every list of length <= 5 over {0, 1, 2}:

  1. elmts       the fold of the element algebra equals a direct tally
  2. size        ms_size equals the sum of multiplicities
  3. min         ms_min of elmts(xs) equals min(xs) for nonempty xs
  4. morphism    for each producing coalgebra c and its unfold f,
                 out(f(s)) == map_step(f, c(s)) at every reachable seed
  5. lower-bound every emitted OCons head bounds its tail's index from below
  6. final-list  unfold_list of out_list is the identity, taking size+1 steps
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, List, Sequence, Tuple

from ..algorithms import (
    ALL_ALGORITHMS,
    build_heap,
    build_tree_fold,
    delete_min_step,
    heap_delete_min_step,
    partition_step,
    select_step,
    sort_with,
)
from ..core import constants as C
from ..core.instrument import counting
from ..core.multiset import EMPTY, Multiset, ms_min, ms_size
from ..core.order import Bound, bound_check
from ..functors.carriers import elist, out_list, out_olist, out_stree, validate
from ..functors.steps import Cons, Indexed, Nil, OCons, SNode, index_of, map_step
from ..schemes import fold_list, unfold_list, unfold_olist, unfold_stree
from .oracles import tally

log = logging.getLogger(__name__)

CHECKS = ("elmts", "size", "min", "morphism", "lower-bound", "final-list")


@dataclass(frozen=True)
class SemanticsFailure:
    check: str
    instance: Tuple[Any, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.check} on {list(self.instance)}: {self.detail}"


@dataclass
class SemanticsReport:
    instances: Counter = field(default_factory=Counter)
    failures: List[SemanticsFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        out = [f"{name}: {self.instances[name]} instances, "
               f"{sum(f.check == name for f in self.failures)} failures" for name in CHECKS]
        out.extend(str(f) for f in self.failures)
        return out


def small_lists(alphabet: Sequence[Any] = C.SMALL_ALPHABET, max_len: int = C.SEMANTICS_MAX_LEN) -> Iterator[Tuple[Any, ...]]:
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def _elt_algebra(step) -> Multiset:
    match step:
        case Nil():
            return EMPTY
        case Cons(a, m):
            return m.insert(a)


# ── producing coalgebras, each paired with the unfold it induces ─────────
def _list_producers() -> List[Tuple[str, Callable[[Any], Any], Callable[[Sequence[Any]], Any]]]:
    return [
        ("select", lambda seed: select_step(seed.value), elist),
        ("tree-delete-min", lambda seed: delete_min_step(seed.value),
         lambda xs: build_tree_fold(elist(xs))),
        ("heap-delete-min", lambda seed: heap_delete_min_step(seed.value),
         lambda xs: build_heap(elist(xs))),
    ]


def _check_list_morphism(name: str, c, start) -> List[str]:
    problems = []
    seed = start
    while True:
        step = c(Indexed(seed, index_of(seed)))
        image = unfold_olist(c, seed)
        expected = map_step(lambda s: unfold_olist(c, s), step)
        if out_olist(image) != expected:
            problems.append(f"{name}: out(f(s)) differs from f applied under c(s) at {seed!r}")
        if not isinstance(step, OCons):
            return problems
        seed = step.tail


def _check_tree_morphism(xs: Sequence[Any]) -> List[str]:
    problems = []
    stack = [elist(xs)]
    while stack:
        seed = stack.pop()
        step = partition_step(Indexed(seed, seed.index))
        image = unfold_stree(partition_step, seed)
        expected = map_step(lambda s: unfold_stree(partition_step, s), step)
        if out_stree(image) != expected:
            problems.append(f"quicksort partition: morphism equation fails at {seed!r}")
        if isinstance(step, SNode):
            stack.extend([step.left, step.right])
    return problems


def _check_instance(xs: Tuple[Any, ...], report: SemanticsReport) -> None:
    def fail(check: str, detail: str) -> None:
        report.failures.append(SemanticsFailure(check, xs, detail))

    e = elist(xs)
    folded = fold_list(_elt_algebra, e)
    direct = Multiset.from_counts(tally(xs).items())
    report.instances["elmts"] += 1
    if folded != direct or e.index != direct:
        fail("elmts", f"fold gives {folded!r}, tally gives {direct!r}")

    report.instances["size"] += 1
    if ms_size(folded) != sum(tally(xs).values()):
        fail("size", f"ms_size {ms_size(folded)} != {sum(tally(xs).values())}")

    if xs:
        report.instances["min"] += 1
        if ms_min(folded) != min(xs):
            fail("min", f"ms_min {ms_min(folded)!r} != min {min(xs)!r}")

    report.instances["morphism"] += 1
    for name, c, seed_of in _list_producers():
        for problem in _check_list_morphism(name, c, seed_of(xs)):
            fail("morphism", problem)
    for problem in _check_tree_morphism(xs):
        fail("morphism", problem)

    report.instances["lower-bound"] += 1
    for algo in ALL_ALGORITHMS:
        result = sort_with(algo, e)
        cell = result
        while isinstance(cell.layer, OCons):
            head, ti = cell.layer.head, cell.layer.tail_index
            if not bound_check(Bound.BELOW, head, ti):
                fail("lower-bound", f"{algo}: head {head!r} exceeds an element of {ti!r}")
            cell = cell.layer.tail
        if not validate(result):
            fail("lower-bound", f"{algo}: result does not validate")

    report.instances["final-list"] += 1
    with counting() as counts:
        again = unfold_list(lambda seed: out_list(seed.value), e)
    if again != e:
        fail("final-list", f"unfold of out_list gives {again!r}")
    if counts["unfold_list.apply"] != len(xs) + 1:
        fail("final-list", f"{counts['unfold_list.apply']} coalgebra steps, expected {len(xs) + 1}")


def semantics_check(alphabet: Sequence[Any] = C.SMALL_ALPHABET,
                    max_len: int = C.SEMANTICS_MAX_LEN) -> SemanticsReport:
    report = SemanticsReport()
    for xs in small_lists(alphabet, max_len):
        _check_instance(xs, report)
    if report.failures:
        log.warning("semantics check: %d failures", len(report.failures))
    else:
        log.info("semantics check: all %d instances hold", sum(report.instances.values()))
    return report
