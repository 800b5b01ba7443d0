"""CLI support: flat-file I/O, oracles, reports, property suites and benchmarks."""

from .bench import BenchRow, run_bench
from .io import format_integers, parse_text, read_integers
from .oracles import reference_sort
from .properties import GROUPS, PropertyFailure, VerifyConfig
from .report import RunReport, run_with_report
from .runner import VerifyReport, run_groups, verify
from .semantics import SemanticsReport, semantics_check
