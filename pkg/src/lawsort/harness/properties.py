"""
properties.py
-------------
The invariant suites behind ``lawsort verify``.

Each group is a plain function ``VerifyConfig -> list[PropertyFailure]`` that
draws its own inputs from a numpy Generator seeded from (config.seed, group
number), so groups share no state and can run concurrently.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Sequence

import numpy as np

from ..algorithms import (
    ALL_ALGORITHMS,
    INSERT_SORT,
    build_heap,
    build_tree_fold,
    build_tree_unfold,
    delete_min,
    delete_min_step,
    heap_delete_min,
    heap_insert,
    insert_sort,
    insert_step,
    select_sort,
    select_step,
    sort_with,
    stree_insert,
)
from ..core import constants as C
from ..core.errors import IndexMismatch, LawsortError
from ..core.instrument import counting
from ..core.mode import Mode, build_mode
from ..core.multiset import Multiset
from ..functors.carriers import (
    EMPTY_HEAP,
    EMPTY_STREE,
    elist,
    olist,
    olist_to_plain,
    validate,
)
from ..functors.steps import NIL, Cons, Indexed, Nil, OCons, SNode, evidence_holds, step_index
from ..laws import Pair, heap_blend, heap_sift, merge, sprout, swap, wither
from ..schemes import unfold_olist
from .oracles import direct_insert, direct_select, is_nondecreasing, reference_sort
from .semantics import semantics_check, small_lists

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = C.DEFAULT_SEED
    cases: int = C.VERIFY_CASES
    max_len: int = C.VERIFY_MAX_LEN
    interleavings: int = C.INTERLEAVINGS
    interleave_ops: int = C.INTERLEAVE_OPS

    @classmethod
    def full(cls, seed: int = C.DEFAULT_SEED) -> "VerifyConfig":
        """Acceptance-scale parameters (slow in checked mode)."""
        return cls(seed=seed, cases=C.VERIFY_FULL_CASES, max_len=C.VERIFY_FULL_MAX_LEN)

    def with_seed(self, seed: int) -> "VerifyConfig":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class PropertyFailure:
    group: str
    invariant: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.group}] {self.invariant}: {self.detail}"


def random_lists(rng: np.random.Generator, cases: int, max_len: int) -> List[List[int]]:
    """Uniform lengths in [0, max_len]; every fourth draw is duplicate-heavy."""
    out = []
    for i in range(cases):
        n = int(rng.integers(0, max_len + 1))
        bound = 3 if i % 4 == 0 else C.VALUE_BOUND
        out.append(rng.integers(-bound, bound + 1, size=n).tolist())
    return out


# ── oracle agreement and intrinsic correctness ───────────────────────────
def check_oracle(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    for values in random_lists(rng, config.cases, config.max_len):
        xs = elist(values)
        expected = reference_sort(values)
        for algo in ALL_ALGORITHMS:
            try:
                result = sort_with(algo, xs)
            except LawsortError as exc:
                failures.append(PropertyFailure("oracle", "totality", f"{algo} raised {exc} on {values}"))
                continue
            plain = olist_to_plain(result)
            if plain != expected:
                failures.append(PropertyFailure("oracle", "oracle agreement", f"{algo} gave {plain} for {values}"))
            if result.index != xs.index:
                failures.append(PropertyFailure("oracle", "index preservation", f"{algo} on {values}"))
            if not (is_nondecreasing(plain) and validate(result)):
                failures.append(PropertyFailure("oracle", "ordered result", f"{algo} on {values}"))
    return failures


def check_agreement(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    for values in small_lists(C.SMALL_ALPHABET, C.FACTORISATION_MAX_LEN):
        outputs = {algo.name: olist_to_plain(sort_with(algo, values)) for algo in ALL_ALGORITHMS}
        if len({tuple(v) for v in outputs.values()}) != 1:
            failures.append(PropertyFailure("agreement", "all algorithms agree", f"{list(values)}: {outputs}"))
    return failures


# ── termination measure ──────────────────────────────────────────────────
def check_measure(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    for values in random_lists(rng, config.cases, config.max_len):
        n = len(values)
        with counting() as counts:
            select_sort(elist(values))
        if counts["unfold_olist.apply"] != n + 1:
            failures.append(PropertyFailure("measure", "select applies its coalgebra n+1 times",
                                            f"{counts['unfold_olist.apply']} for n={n}"))
        with counting() as counts:
            build_tree_unfold(elist(values))
        if counts["unfold_stree.node"] != n or counts["unfold_stree.apply"] != 2 * n + 1:
            failures.append(PropertyFailure("measure", "quicksort build produces n nodes",
                                            f"{counts['unfold_stree.node']} nodes, "
                                            f"{counts['unfold_stree.apply']} steps for n={n}"))
    return failures


# ── pathological coalgebras ──────────────────────────────────────────────
def constant_stream(a: Any) -> Callable[[Indexed], Any]:
    """Emit ``a`` forever, claiming whatever is left once one ``a`` is gone."""
    def c(seed: Indexed):
        rest = seed.index.remove_one(a)
        return OCons(a, seed.value, seed.index if rest is None else rest)
    return c


def premature_nil(seed: Indexed):
    return NIL


def wrong_element(seed: Indexed):
    bogus = seed.index.max() + 1 if seed.index else 0
    return OCons(bogus, seed.value, seed.index)


def stale_claim(seed: Indexed):
    if not seed.index:
        return NIL
    return OCons(seed.index.min(), seed.value, seed.index)


PATHOLOGIES: Dict[str, Callable[[Sequence[Any]], Callable[[Indexed], Any]]] = {
    "constant stream": lambda values: constant_stream(values[0] if values else 0),
    "premature nil": lambda values: premature_nil,
    "wrong element": lambda values: wrong_element,
    "stale index claim": lambda values: stale_claim,
}


def check_pathologies(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    # rejection within n+1 steps needs the per-step index checks
    with build_mode(Mode.CHECKED):
        return _pathologies(config, rng)


def _pathologies(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    for n in range(1, min(config.max_len, 50) + 1):
        a = int(rng.integers(-C.VALUE_BOUND, C.VALUE_BOUND + 1))
        for name, make in PATHOLOGIES.items():
            values = [a] * n
            with counting() as counts:
                try:
                    unfold_olist(make(values), elist(values))
                except IndexMismatch:
                    pass
                except LawsortError as exc:
                    failures.append(PropertyFailure("pathology", name, f"raised {type(exc).__name__}: {exc}"))
                    continue
                else:
                    failures.append(PropertyFailure("pathology", name, f"accepted for n={n}"))
                    continue
            if counts["unfold_olist.apply"] > n + 1:
                failures.append(PropertyFailure("pathology", name,
                                                f"{counts['unfold_olist.apply']} steps before rejection, n={n}"))
    return failures


# ── law factorisation ────────────────────────────────────────────────────
def check_factorisation(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    for values in small_lists(C.SMALL_ALPHABET, C.FACTORISATION_MAX_LEN):
        values = list(values)
        if values:
            head, rest = values[0], sorted(values[1:])
            got = olist_to_plain(insert_step(Cons(head, olist(rest))))
            if got != direct_insert(head, rest):
                failures.append(PropertyFailure("factorisation", "insert = apo(swap . <id, out>)",
                                                f"inserting {head} into {rest} gave {got}"))
        step = select_step(elist(values))
        if isinstance(step, Nil):
            got_sel = None
        else:
            got_sel = (step.head, list(step.tail))
        want_sel = direct_select(values) if values else None
        if got_sel != want_sel:
            failures.append(PropertyFailure("factorisation", "select = para([id, in] . swap)",
                                            f"{values}: {got_sel} vs {want_sel}"))
    return failures


# ── worked example ───────────────────────────────────────────────────────
def check_worked_example(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    got = olist_to_plain(insert_sort(elist([2, 1])))
    if got != [1, 2]:
        return [PropertyFailure("example", "insert_sort [2, 1] = [1, 2]", f"got {got}")]
    return []


# ── data-structure by-products ───────────────────────────────────────────
def _interleave(kind: str, insert, delete_min_, empty, rng: np.random.Generator,
                ops: int) -> List[PropertyFailure]:
    failures = []
    structure = empty
    for _ in range(ops):
        if structure.index and rng.random() < 0.4:
            before = structure.index
            least, structure = delete_min_(structure)
            if least != before.min():
                failures.append(PropertyFailure("by-products", f"{kind} delete_min returns the minimum",
                                                f"{least} vs {before.min()}"))
            if structure.index != before.remove_one(least):
                failures.append(PropertyFailure("by-products", f"{kind} delete_min removes one occurrence",
                                                f"{structure.index!r} from {before!r}"))
        else:
            x = int(rng.integers(-10, 11))
            before = structure.index
            structure = insert(x, structure)
            if structure.index != before.insert(x):
                failures.append(PropertyFailure("by-products", f"{kind} insert adds one occurrence", f"{x}"))
        if not validate(structure):
            failures.append(PropertyFailure("by-products", f"{kind} stays valid", repr(structure)))
            break
    return failures


def check_byproducts(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    for _ in range(config.interleavings):
        failures += _interleave("stree", stree_insert, delete_min, EMPTY_STREE, rng, config.interleave_ops)
        failures += _interleave("heap", heap_insert, heap_delete_min, EMPTY_HEAP, rng, config.interleave_ops)
    return failures


# ── early return ─────────────────────────────────────────────────────────
def swap_calls(values: Sequence[Any]) -> int:
    with counting() as counts:
        sort_with(INSERT_SORT, values)
    return counts["swap"]


def check_early_return(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    m = config.max_len
    for n in sorted({1, 2, 3, m // 4, m // 2, m} - {0}):
        ascending = swap_calls(range(n))
        descending = swap_calls(range(n, 0, -1))
        if ascending > 2 * n:
            failures.append(PropertyFailure("early-return", "sorted input costs at most 2n swaps",
                                            f"{ascending} for n={n}"))
        if descending < n * (n - 1) // 2:
            failures.append(PropertyFailure("early-return", "reverse input costs at least n(n-1)/2 swaps",
                                            f"{descending} for n={n}"))
    return failures


# ── the laws themselves ──────────────────────────────────────────────────
def _law_inputs(rng: np.random.Generator, cases: int) -> Dict[str, List[Any]]:
    inputs: Dict[str, List[Any]] = {name: [NIL] for name in ("swap", "sprout", "heap_sift")}
    inputs["wither"] = []
    inputs["heap_blend"] = []
    inputs["merge"] = []
    for values in random_lists(rng, cases, 12):
        a = int(rng.integers(-5, 6))
        o = olist(sorted(values))
        t = build_tree_fold(elist(values))
        h = build_heap(elist(values))
        inputs["swap"].append(Cons(a, (o, o.layer)))
        inputs["sprout"].append(Cons(a, (t, t.layer)))
        inputs["heap_sift"].append(Cons(a, (h, h.layer)))
        if isinstance(t.layer, SNode):
            l, x, r, li, ri = t.layer.left, t.layer.pivot, t.layer.right, t.layer.left_index, t.layer.right_index
            inputs["wither"].append(SNode((l, delete_min_step(l)), x, (r, delete_min_step(r)), li, ri))
        other = sorted(int(v) for v in rng.integers(-5, 6, size=int(rng.integers(0, 6))))
        inputs["heap_blend"].append(Pair(h, build_heap(elist(other))))
        inputs["merge"].append(Pair(o, olist(other)))
    return inputs


def _input_index(s: Any) -> Multiset:
    return s.index if isinstance(s, Pair) else step_index(s)


_LAWS = {"swap": swap, "sprout": sprout, "wither": wither,
         "heap_sift": heap_sift, "heap_blend": heap_blend, "merge": merge}


def _swap_clause(s: Any) -> str:
    match s:
        case Nil():
            return "nil"
        case Cons(_, (_, Nil())):
            return "singleton"
        case Cons(a, (_, OCons(b, _, _))):
            return "a<=b" if a <= b else "a>b"
    return "?"


def check_laws(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    failures = []
    inputs = _law_inputs(rng, config.cases)
    for name, law in _LAWS.items():
        for s in inputs[name]:
            out = law(s)
            if step_index(out) != _input_index(s):
                failures.append(PropertyFailure("laws", f"{name} preserves the index", repr(s)))
            if not evidence_holds(out):
                failures.append(PropertyFailure("laws", f"{name} emits valid evidence", repr(out)))
    covered = {_swap_clause(s) for s in inputs["swap"]}
    missing = {"nil", "singleton", "a<=b", "a>b"} - covered
    if missing:
        failures.append(PropertyFailure("laws", "swap clause coverage", f"never hit {sorted(missing)}"))
    return failures


def check_semantics(config: VerifyConfig, rng: np.random.Generator) -> List[PropertyFailure]:
    report = semantics_check()
    return [PropertyFailure("semantics", f.check, str(f)) for f in report.failures]


GROUPS: Dict[str, Callable[[VerifyConfig, np.random.Generator], List[PropertyFailure]]] = {
    "oracle": check_oracle,
    "agreement": check_agreement,
    "measure": check_measure,
    "pathology": check_pathologies,
    "factorisation": check_factorisation,
    "example": check_worked_example,
    "by-products": check_byproducts,
    "early-return": check_early_return,
    "laws": check_laws,
    "semantics": check_semantics,
}


def run_group(name: str, config: VerifyConfig) -> List[PropertyFailure]:
    """Run one group with its own generator; scheme errors become failures."""
    number = list(GROUPS).index(name)
    rng = np.random.default_rng([config.seed, number])
    log.info("group %s: start", name)
    try:
        failures = GROUPS[name](config, rng)
    except LawsortError as exc:
        failures = [PropertyFailure(name, type(exc).__name__, str(exc))]
    for failure in failures:
        log.warning("%s", failure)
    log.info("group %s: %d failures", name, len(failures))
    return failures
