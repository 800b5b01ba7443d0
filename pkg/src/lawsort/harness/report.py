"""
report.py
---------
RunReport: one instrumented sort run, its counters and verdicts, printed by
``lawsort trace`` as ``key=value`` lines.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from ..algorithms import AlgorithmId, sort_with
from ..core import mode
from ..core.instrument import counting
from ..functors.carriers import OList, elist, olist_to_plain, validate
from .oracles import is_nondecreasing, reference_sort

log = logging.getLogger(__name__)


@dataclass
class RunReport:
    algorithm: str
    n: int
    mode: str
    counts: Counter = field(default_factory=Counter)
    wall_time: float = 0.0
    ordered: bool = False
    index_preserved: bool = False
    oracle_equal: bool = False

    @property
    def ok(self) -> bool:
        return self.ordered and self.index_preserved and self.oracle_equal

    def records(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"algo": self.algorithm, "n": self.n, "mode": self.mode}
        for name in sorted(self.counts):
            key = name if "." in name else f"{name}_calls"
            out[key] = self.counts[name]
        out["wall_ms"] = f"{self.wall_time * 1e3:.3f}"
        out["ordered"] = _flag(self.ordered)
        out["index_preserved"] = _flag(self.index_preserved)
        out["oracle_equal"] = _flag(self.oracle_equal)
        return out

    def lines(self) -> List[str]:
        return [f"{k}={v}" for k, v in self.records().items()]


def _flag(v: bool) -> str:
    return "true" if v else "false"


def run_with_report(algo: AlgorithmId | str, values: Sequence[Any]) -> Tuple[OList, RunReport]:
    """Sort ``values`` with counters on, then judge the result against the oracle."""
    if isinstance(algo, str):
        algo = AlgorithmId.parse(algo)
    xs = elist(values)
    with counting() as counts:
        start = time.perf_counter()
        result = sort_with(algo, xs)
        elapsed = time.perf_counter() - start
    plain = olist_to_plain(result)
    report = RunReport(
        algorithm=algo.name,
        n=len(values),
        mode=mode.current_mode().value,
        counts=counts,
        wall_time=elapsed,
        ordered=is_nondecreasing(plain) and validate(result),
        index_preserved=result.index == xs.index,
        oracle_equal=plain == reference_sort(values),
    )
    if not report.ok:
        log.warning("%s on %d elements: verdicts %s", algo, len(values),
                    {k: v for k, v in report.records().items() if v == "false"})
    return result, report
