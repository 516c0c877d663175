"""
verify: exhaustive checks of a claim, streamed as JSON lines.
"""
from typing import Optional

import click

from llt_ribbon.cli.dependencies import get_settings, handle_errors, resolve_limit
from llt_ribbon.cli.literals import parse_triple
from llt_ribbon.core.errors import ExitCode
from llt_ribbon.schemas.command import Command, Verb
from llt_ribbon.schemas.report import GridSummary
from llt_ribbon.theorems import RecurrenceTriple, check_lee_recurrence
from llt_ribbon.verification import Claim, run_claim


@click.command()
@click.argument("claim", type=click.Choice([c.value for c in Claim]))
@click.option("--max-vertices", type=click.IntRange(min=1), help="Largest graph or degree in the grid.")
@click.option("--workers", type=click.IntRange(min=1), help="Worker processes for the grid.")
@click.option("--max-weight", type=click.IntRange(min=0), help="Largest weight in lemma grids.")
@click.option("--triple", help="Check one recurrence triple A/A1/A2 instead of the grid.")
@click.option("--strict", is_flag=True, help="Reject triples whose H2 index reaches the last vertex.")
@click.pass_context
@handle_errors
def verify(
    ctx: click.Context,
    claim: str,
    max_vertices: Optional[int],
    workers: Optional[int],
    max_weight: Optional[int],
    triple: Optional[str],
    strict: bool,
):
    """Check CLAIM on every instance of its grid; exit 1 on a counterexample."""
    settings = get_settings(ctx)
    command = Command(verb=Verb.VERIFY, target=claim, limit=max_vertices)
    claim = Claim(command.target)
    limit = resolve_limit(ctx, command.limit)

    if triple is not None:
        if claim is not Claim.LEE_RECURRENCE:
            raise click.UsageError("--triple only applies to lee-recurrence")
        recurrence = RecurrenceTriple.from_sequences(*parse_triple(triple))
        reports = [check_lee_recurrence(recurrence, limit=limit, strict=strict)]
    else:
        reports = run_claim(
            claim,
            max_vertices=limit,
            workers=workers or settings.WORKERS,
            max_weight=max_weight if max_weight is not None else settings.GRID_MAX_WEIGHT,
        )

    summary = GridSummary(claim=claim.value)
    for report in reports:
        click.echo(report.to_json())
        summary.add(report)

    click.echo(
        f"{claim.value}: {summary.instances - summary.failures}/{summary.instances} instances hold",
        err=True,
    )
    if not summary.holds:
        raise click.exceptions.Exit(int(ExitCode.COUNTEREXAMPLE))
