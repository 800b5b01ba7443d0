"""
io.py
-----
Reading and writing the CLI's flat-file format: one signed 64-bit decimal
integer per line, LF-terminated.
"""
from __future__ import annotations

import re
from typing import Iterable, List, Union

from ..core.constants import INT64_MAX, INT64_MIN
from ..core.errors import MalformedInput

_DECIMAL = re.compile(r"[+-]?[0-9]+")


def parse_int64(text: str, line_no: int) -> int:
    if not _DECIMAL.fullmatch(text):
        raise MalformedInput(line_no, text)
    value = int(text)
    if not INT64_MIN <= value <= INT64_MAX:
        raise MalformedInput(line_no, text, "outside the signed 64-bit range")
    return value


def _decode(line: Union[str, bytes], line_no: int) -> str:
    if isinstance(line, str):
        return line
    try:
        return line.decode("utf-8")
    except UnicodeDecodeError:
        raise MalformedInput(line_no, line.decode("utf-8", errors="replace"), "not valid UTF-8") from None


def read_integers(lines: Iterable[Union[str, bytes]]) -> List[int]:
    """Parse an iterable of lines (a text or binary file, or ``text.splitlines(True)``).

    Binary lines are decoded one at a time, so an undecodable line is reported
    by number.  A trailing CR is tolerated; blank lines are not.
    """
    values = []
    for line_no, raw in enumerate(lines, start=1):
        line = _decode(raw, line_no)
        values.append(parse_int64(line.rstrip("\n").rstrip("\r"), line_no))
    return values


def parse_text(text: str) -> List[int]:
    return read_integers(text.splitlines(keepends=True))


def format_integers(values: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in values)
