"""
Command-line interface for the knotobs library.

Exit codes: 0 Concordant, 1 Obstructed, 2 Inconclusive, 64 unparsable
expression, 65 input outside what a command supports, 66 invalid command-line
usage, 78 unusable configuration.
"""

import sys
from typing import Any, Dict, NoReturn, Optional

import click
from pydantic import ValidationError

from knotobs import __version__
from knotobs.covers.double_cover import (
    UnsupportedInputError,
    double_branched_cover_two_strand,
    h1_order,
    is_reduced_scoped,
)
from knotobs.exporters import ScanExporter, VerdictExporter, render_verdict
from knotobs.invariants.torus import alexander_fraction, determinant_sum
from knotobs.models.knot_sum import InvalidTorusKnotError, KnotSum, split
from knotobs.models.scan_config import ScanConfig
from knotobs.models.verdict import Status
from knotobs.obstruct.candidates import candidate_alexander, determinant_ratio
from knotobs.parser.expression_parser import KnotSumSyntaxError, parse
from knotobs.pipeline import ObstructionPipeline
from knotobs.scan.enumerator import Scanner
from knotobs.utils.config import get_default_config, load_config
from knotobs.utils.logging import setup_logging

EXIT_CODES = {
    Status.CONCORDANT: 0,
    Status.OBSTRUCTED: 1,
    Status.INCONCLUSIVE: 2,
}
EXIT_PARSE_ERROR = 64
EXIT_UNSUPPORTED = 65
EXIT_USAGE = 66
EXIT_CONFIG = 78

# Lets EXPR start with a negative factor such as -T(2,3).
EXPR_CONTEXT = {"ignore_unknown_options": True}


def exit_code_for(status: Status) -> int:
    """Process exit code for a verdict status."""
    return EXIT_CODES[status]


def _parse_or_exit(expr: str) -> KnotSum:
    try:
        return parse(expr)
    except KnotSumSyntaxError as e:
        click.echo(f"Parse error: {e}", err=True)
        click.echo(e.pointer(), err=True)
    except InvalidTorusKnotError as e:
        click.echo(f"Invalid torus knot: {e}", err=True)
    sys.exit(EXIT_PARSE_ERROR)


class KnotobsUsageError(click.UsageError):
    """A usage error whose exit code stays clear of the verdict codes."""

    exit_code = EXIT_USAGE


class KnotobsGroup(click.Group):
    """Command group that reports click usage errors with EXIT_USAGE."""

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def _config_error(message: str) -> NoReturn:
    click.echo(f"Configuration error: {message}", err=True)
    sys.exit(EXIT_CONFIG)


def _load_config(config: Optional[str]) -> Dict[str, Any]:
    try:
        return load_config(config) if config else get_default_config()
    except (FileNotFoundError, ValueError) as e:
        _config_error(str(e))


def _build_pipeline(settings: Dict[str, Any]) -> ObstructionPipeline:
    try:
        return ObstructionPipeline(settings)
    except ValueError as e:
        _config_error(str(e))


@click.group(cls=KnotobsGroup)
@click.version_option(version=__version__, prog_name="knotobs")
def cli():
    """
    knotobs: Obstruct sums of torus knots from being concordant to L-space knots.
    """
    pass


@cli.command(context_settings=EXPR_CONTEXT)
@click.argument("expr")
@click.option(
    "--config",
    "-c",
    type=click.Path(file_okay=True, dir_okay=False),
    help="Path to the configuration file (YAML)",
)
@click.option(
    "--output",
    "-o",
    type=click.Path(file_okay=True, dir_okay=False),
    help="Also save the verdict to this JSON file",
)
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.option("--quiet", "-q", is_flag=True, help="Only log warnings and errors")
def check(
    expr: str,
    config: Optional[str] = None,
    output: Optional[str] = None,
    verbose: bool = False,
    quiet: bool = False,
):
    """
    Evaluate EXPR, e.g. "T(3,5) # -T(2,3)", and print its verdict as JSON.
    """
    setup_logging(verbose=verbose, quiet=quiet)

    k = _parse_or_exit(expr)
    pipeline = _build_pipeline(_load_config(config))
    verdict = pipeline.run(k)

    click.echo(render_verdict(verdict))
    if output:
        VerdictExporter(output).export([verdict])
    sys.exit(exit_code_for(verdict.status))


@cli.command(context_settings=EXPR_CONTEXT)
@click.argument("expr")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def alex(expr: str, verbose: bool = False):
    """
    Print the Alexander polynomial forced on an L-space knot concordant to EXPR.

    Sums with factors of one sign only print their plain Alexander polynomial.
    """
    setup_logging(verbose=verbose, quiet=not verbose)

    k = _parse_or_exit(expr)
    fraction = alexander_fraction(k)

    if not k.positives or not k.negatives:
        click.echo(str(fraction.plain_product()))
        return

    quotient = candidate_alexander(k)
    if quotient is None:
        click.echo(
            f"not a polynomial: ({fraction.numerator}) / ({fraction.denominator})"
        )
        sys.exit(1)
    click.echo(str(quotient))


@cli.command(context_settings=EXPR_CONTEXT)
@click.argument("expr")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def cover(expr: str, verbose: bool = False):
    """
    Print the double branched cover of a two-strand EXPR as lens spaces.
    """
    setup_logging(verbose=verbose, quiet=not verbose)

    k = _parse_or_exit(expr)
    try:
        lens_sum = double_branched_cover_two_strand(k)
        reducedness = is_reduced_scoped(lens_sum)
    except UnsupportedInputError as e:
        click.echo(f"Unsupported input: {e}", err=True)
        sys.exit(EXIT_UNSUPPORTED)

    click.echo(str(lens_sum))
    click.echo(f"h1 = {h1_order(lens_sum)}")
    line = f"reduced = {'true' if reducedness.reduced else 'false'}"
    if reducedness.reason:
        line += f" ({reducedness.reason})"
    click.echo(line)


@cli.command(context_settings=EXPR_CONTEXT)
@click.argument("expr")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def det(expr: str, verbose: bool = False):
    """
    Print the determinants of the parts of EXPR and the candidate determinant.
    """
    setup_logging(verbose=verbose, quiet=not verbose)

    k = _parse_or_exit(expr)
    parts = split(k)
    det_plus, det_minus = determinant_ratio(k)

    click.echo(f"det(K) = {determinant_sum(k)}")
    click.echo(f"det(K+) = {det_plus}")
    click.echo(f"det(K-) = {determinant_sum(parts.k_minus_other)}")
    click.echo(f"det(K2-) = {determinant_sum(parts.k_minus_two)}")
    if det_plus % det_minus:
        click.echo(f"candidate det = {det_plus}/{det_minus} (not an integer)")
    else:
        click.echo(f"candidate det = {det_plus // det_minus}")


@cli.command()
@click.option(
    "--family",
    type=click.Choice(["two-strand", "general"]),
    help="Two-strand sums of T(2,q), or general torus knot sums",
)
@click.option("--max-q", type=int, help="Largest torus parameter q")
@click.option("--max-p", type=int, help="Largest torus parameter p (general family)")
@click.option("--max-factors", type=int, help="Largest number of factors of each sign")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "csv"]),
    help="JSON-lines or CSV records",
)
@click.option("--positives-only", is_flag=True, help="Enumerate sums without negative factors")
@click.option(
    "--config",
    "-c",
    type=click.Path(file_okay=True, dir_okay=False),
    help="Path to the configuration file (YAML)",
)
@click.option(
    "--output",
    "-o",
    type=click.Path(file_okay=True, dir_okay=False),
    help="Write records to this file instead of stdout",
)
@click.option(
    "--summary-file",
    type=click.Path(file_okay=True, dir_okay=False),
    help="Save the scan summary as JSON",
)
@click.option("--progress/--no-progress", default=False, help="Show a progress bar on stderr")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.option("--quiet", "-q", is_flag=True, help="Only log warnings and errors")
def scan(
    family: Optional[str] = None,
    max_q: Optional[int] = None,
    max_p: Optional[int] = None,
    max_factors: Optional[int] = None,
    output_format: Optional[str] = None,
    positives_only: bool = False,
    config: Optional[str] = None,
    output: Optional[str] = None,
    summary_file: Optional[str] = None,
    progress: bool = False,
    verbose: bool = False,
    quiet: bool = False,
):
    """
    Enumerate every reduced sum within bounds and evaluate each one.
    """
    setup_logging(verbose=verbose, quiet=quiet)

    settings = _load_config(config)
    scan_settings = dict(settings.get("scan", {}))
    overrides = {
        "family": family,
        "max_q": max_q,
        "max_p": max_p,
        "max_factors_per_sign": max_factors,
        "format": output_format,
        "positives_only": True if positives_only else None,
    }
    scan_settings.update({k: v for k, v in overrides.items() if v is not None})

    try:
        scan_config = ScanConfig.from_dict(scan_settings)
    except ValidationError as e:
        raise KnotobsUsageError(f"Invalid scan configuration:\n{e}")

    export_settings = settings.get("export", {})
    output = output or export_settings.get("scan_path")
    summary_file = summary_file or export_settings.get("summary_path")

    scanner = Scanner(scan_config, _build_pipeline(settings), show_progress=progress)
    exporter = ScanExporter(scan_config.output_format, output)
    exporter.export(scanner.run())

    scanner.summary.print_summary()
    if summary_file:
        scanner.summary.save_to_file(summary_file)


def main():
    """Entry point for the CLI."""
    cli()
