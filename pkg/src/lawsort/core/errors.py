"""Exception hierarchy for lawsort."""
from __future__ import annotations


class LawsortError(Exception):
    """Base class for every error raised by the library."""


class SchemeError(LawsortError):
    """A structured-recursion contract was broken."""


class IndexMismatch(SchemeError):
    """A step's multiset index disagrees with the index it must preserve."""


class EvidenceViolation(SchemeError):
    """An ordering side condition (the `All` bound) does not hold."""


class FuelExhausted(SchemeError):
    """An unfold ran past the step bound implied by its seed's index size."""


class EmptyStructure(LawsortError):
    """delete_min was asked for the least element of an empty structure."""


class MalformedInput(LawsortError):
    """An input line is not a signed 64-bit decimal integer."""

    def __init__(self, line_no: int, text: str, reason: str = "not a signed 64-bit integer") -> None:
        self.line_no = line_no
        self.text = text
        super().__init__(f"line {line_no}: {text!r} is {reason}")
