"""Law-application and step counters used by `trace`, `bench` and the tests."""
from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

_counter: ContextVar[Optional[Counter]] = ContextVar("lawsort_counter", default=None)


def tick(name: str, n: int = 1) -> None:
    counter = _counter.get()
    if counter is not None:
        counter[name] += n


@contextmanager
def counting() -> Iterator[Counter]:
    """Collect every `tick` made inside the block into a fresh Counter."""
    counter: Counter = Counter()
    token = _counter.set(counter)
    try:
        yield counter
    finally:
        _counter.reset(token)
