"""Elements, canonical multisets, build mode and error types."""

from .errors import (
    EmptyStructure,
    EvidenceViolation,
    FuelExhausted,
    IndexMismatch,
    LawsortError,
    MalformedInput,
    SchemeError,
)
from .instrument import counting, tick
from .mode import Mode, build_mode, current_mode, is_checked, set_mode
from .multiset import (
    EMPTY,
    Multiset,
    elmts,
    ms_empty,
    ms_insert,
    ms_max,
    ms_min,
    ms_remove_one,
    ms_size,
    ms_union,
)
from .order import Bound, LeqWitness, bound_check, compare_total, leq
