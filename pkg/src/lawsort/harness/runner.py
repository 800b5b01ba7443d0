"""
runner.py
---------
Runs the property groups of ``lawsort verify`` concurrently.

Each group runs in a worker thread via ``asyncio.to_thread``; the thread
starts from a copy of the caller's context, so it sees the caller's build mode.
Groups own their inputs and return their failures, nothing else is shared.
"""
from __future__ import annotations

import asyncio
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from .properties import GROUPS, PropertyFailure, VerifyConfig, run_group

log = logging.getLogger(__name__)


@dataclass
class VerifyReport:
    failures: Dict[str, List[PropertyFailure]] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def lines(self) -> List[str]:
        out = []
        for name, failures in self.failures.items():
            out.append(f"{name}: {'ok' if not failures else f'{len(failures)} failures'}")
            out.extend(f"  {f}" for f in failures)
        out.append(f"{'PASS' if self.ok else 'FAIL'} ({self.elapsed:.2f}s)")
        return out


async def run_groups(config: VerifyConfig, groups: Optional[Iterable[str]] = None) -> VerifyReport:
    names = list(GROUPS) if groups is None else list(groups)
    unknown = [n for n in names if n not in GROUPS]
    if unknown:
        raise ValueError(f"unknown property groups: {', '.join(unknown)}")
    start = time.perf_counter()
    results = await asyncio.gather(*(asyncio.to_thread(run_group, name, config) for name in names))
    report = VerifyReport(dict(zip(names, results)), time.perf_counter() - start)
    log.info("verify finished in %.2fs, %s", report.elapsed, "pass" if report.ok else "FAIL")
    return report


def verify(config: VerifyConfig, groups: Optional[Iterable[str]] = None) -> VerifyReport:
    """Blocking entry point for the CLI."""
    return asyncio.run(run_groups(config, groups))
