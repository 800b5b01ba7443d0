# main.py  (entry-point for `python -m lawsort` or the `lawsort` script)
"""
Command-line interface.

  lawsort sort            sort integers from a file or stdin
  lawsort verify          run the property suites, exit 2 on any failure
  lawsort bench           timing table, trusted mode
  lawsort trace           one instrumented run as key=value lines
  lawsort semantics-check exhaustive multiset-semantics checks
"""
from __future__ import annotations

import logging
import sys
from dataclasses import replace

import click
import numpy as np

from .algorithms import ALL_ALGORITHMS, AlgorithmId, sort_with
from .core import constants as C
from .core.errors import LawsortError, MalformedInput, SchemeError
from .core.mode import Mode, set_mode
from .functors.carriers import olist_to_plain
from .harness.bench import HEADER, run_bench
from .harness.io import format_integers, read_integers
from .harness.properties import GROUPS, VerifyConfig
from .harness.report import run_with_report
from .harness.runner import verify as run_verify
from .harness.semantics import semantics_check

log = logging.getLogger("lawsort")

ALGO_CHOICE = click.Choice(C.ALGO_NAMES)
MODE_CHOICE = click.Choice([m.value for m in Mode])


def _setup_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("[%(name)s] %(message)s"))
    root = logging.getLogger("lawsort")
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    root.propagate = False


def _apply_mode(value: str | None) -> None:
    if value is not None:
        set_mode(value)


def _read(stream) -> list[int]:
    try:
        return read_integers(stream)
    except MalformedInput as exc:
        click.echo(f"lawsort: malformed input, {exc}", err=True)
        sys.exit(C.EXIT_MALFORMED_INPUT)


def _parse_sizes(ctx, param, value: str | None):
    if value is None:
        return C.BENCH_SIZES
    try:
        sizes = tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"{value!r} is not a comma-separated list of integers") from None
    if not sizes or any(n < 0 for n in sizes):
        raise click.BadParameter("sizes must be non-negative integers")
    return sizes


class LawsortGroup(click.Group):
    """Click group whose usage errors exit with EXIT_USAGE, not click's default 2."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as exc:
            exc.exit_code = C.EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = C.EXIT_USAGE
            raise


@click.group(cls=LawsortGroup)
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level on stderr.")
def cli(verbose: bool) -> None:
    """Sorting algorithms derived from distributive laws, checked against their multiset index."""
    _setup_logging(verbose)


@cli.command()
@click.option("--algo", type=ALGO_CHOICE, default=C.ALGO_INSERT, show_default=True)
@click.option("--input", "input_file", type=click.File("rb"), default="-", help="Input path (default: stdin).")
@click.option("--output", "output_file", type=click.File("w"), default="-", help="Output path (default: stdout).")
@click.option("--mode", type=MODE_CHOICE, default=None, help="Build mode (default: $LAWSORT_MODE or checked).")
def sort(algo: str, input_file, output_file, mode: str | None) -> None:
    """Sort newline-separated signed 64-bit integers."""
    _apply_mode(mode)
    values = _read(input_file)
    try:
        result = sort_with(algo, values)
    except SchemeError as exc:
        click.echo(f"lawsort: {algo} violated an invariant: {exc}", err=True)
        sys.exit(C.EXIT_PROPERTY_FAILURE)
    log.debug("%s sorted %d values", algo, len(values))
    output_file.write(format_integers(olist_to_plain(result)))


@cli.command()
@click.option("--seed", type=int, default=C.DEFAULT_SEED, show_default=True)
@click.option("--cases", type=click.IntRange(min=0), default=None, help="Random lists per group.")
@click.option("--max-len", type=click.IntRange(min=0), default=None, help="Longest random list.")
@click.option("--full", is_flag=True, help="Acceptance-scale parameters (slow).")
@click.option("--group", "groups", type=click.Choice(list(GROUPS)), multiple=True, help="Run only these groups.")
@click.option("--mode", type=MODE_CHOICE, default=None)
def verify(seed: int, cases: int | None, max_len: int | None, full: bool, groups, mode: str | None) -> None:
    """Run the property suites; exit status 2 if any invariant fails."""
    _apply_mode(mode)
    config = VerifyConfig.full(seed) if full else VerifyConfig(seed=seed)
    if cases is not None:
        config = replace(config, cases=cases)
    if max_len is not None:
        config = replace(config, max_len=max_len)
    report = run_verify(config, groups or None)
    for line in report.lines():
        click.echo(line)
    if not report.ok:
        sys.exit(C.EXIT_PROPERTY_FAILURE)


@cli.command()
@click.option("--sizes", callback=_parse_sizes, default=None, help="Comma-separated input sizes.")
@click.option("--seed", type=int, default=C.DEFAULT_SEED, show_default=True)
@click.option("--algo", "algos", type=ALGO_CHOICE, multiple=True, help="Restrict to these algorithms.")
@click.option("--shape", "shapes", type=click.Choice(C.BENCH_SHAPES), multiple=True)
def bench(sizes, seed: int, algos, shapes) -> None:
    """Median-of-5 timings per algorithm, size and input shape (trusted mode)."""
    algorithms = [AlgorithmId.parse(a) for a in algos] if algos else list(ALL_ALGORITHMS)
    click.echo(HEADER)
    for row in run_bench(sizes, shapes or C.BENCH_SHAPES, algorithms, seed):
        click.echo(row.line())


@cli.command()
@click.option("--algo", type=ALGO_CHOICE, default=C.ALGO_INSERT, show_default=True)
@click.option("--input", "input_file", type=click.File("rb"), default=None, help="Input path; omit to generate.")
@click.option("--n", "n", type=click.IntRange(min=0), default=10, show_default=True, help="Generated input size.")
@click.option("--seed", type=int, default=C.DEFAULT_SEED, show_default=True)
@click.option("--mode", type=MODE_CHOICE, default=None)
def trace(algo: str, input_file, n: int, seed: int, mode: str | None) -> None:
    """Print one instrumented run as key=value records."""
    _apply_mode(mode)
    if input_file is not None:
        values = _read(input_file)
    else:
        values = np.random.default_rng(seed).integers(-C.VALUE_BOUND, C.VALUE_BOUND + 1, size=n).tolist()
    try:
        _, report = run_with_report(algo, values)
    except SchemeError as exc:
        click.echo(f"lawsort: {algo} violated an invariant: {exc}", err=True)
        sys.exit(C.EXIT_PROPERTY_FAILURE)
    for line in report.lines():
        click.echo(line)
    if not report.ok:
        sys.exit(C.EXIT_PROPERTY_FAILURE)


@cli.command("semantics-check")
def semantics_check_cmd() -> None:
    """Exhaustively check the multiset semantics on short lists over {0, 1, 2}."""
    report = semantics_check()
    for line in report.lines():
        click.echo(line)
    if not report.ok:
        sys.exit(C.EXIT_PROPERTY_FAILURE)


def main() -> None:
    try:
        cli()
    except LawsortError as exc:
        click.echo(f"lawsort: {exc}", err=True)
        sys.exit(C.EXIT_PROPERTY_FAILURE)


if __name__ == "__main__":
    main()
