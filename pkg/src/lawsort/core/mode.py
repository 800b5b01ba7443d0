"""
mode.py
-------
Checked vs trusted build mode.

Checked mode validates ordering evidence and index preservation at every
smart constructor and scheme step; trusted mode skips those checks (fuel bounds
stay on).  The mode is a context-local setting, so concurrently running
property groups each see the mode they were started with.
"""
from __future__ import annotations

import enum
import os
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Union

from .constants import DEFAULT_MODE, MODE_ENV_VAR


class Mode(enum.Enum):
    CHECKED = "checked"
    TRUSTED = "trusted"


def _initial_mode() -> Mode:
    raw = os.environ.get(MODE_ENV_VAR, DEFAULT_MODE).strip().lower()
    try:
        return Mode(raw)
    except ValueError:
        raise ValueError(f"{MODE_ENV_VAR}={raw!r}: expected 'checked' or 'trusted'") from None


_mode: ContextVar[Mode] = ContextVar("lawsort_mode", default=_initial_mode())


def current_mode() -> Mode:
    return _mode.get()


def is_checked() -> bool:
    return _mode.get() is Mode.CHECKED


def set_mode(mode: Union[Mode, str]) -> None:
    """Set the build mode for the current context."""
    _mode.set(Mode(mode))


@contextmanager
def build_mode(mode: Union[Mode, str]) -> Iterator[Mode]:
    """Scope a build mode to a ``with`` block."""
    token = _mode.set(Mode(mode))
    try:
        yield _mode.get()
    finally:
        _mode.reset(token)
