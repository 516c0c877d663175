"""
oracle: brute-force LLT expansion with coloring count and wall time.
"""
import logging
import time
from typing import Optional

import click

from llt_ribbon.cli.dependencies import handle_errors, resolve_limit
from llt_ribbon.cli.literals import GRAPH_GRAMMAR, parse_graph
from llt_ribbon.models.qpoly import QPoly
from llt_ribbon.models.symfunc import SymFunc
from llt_ribbon.render import render_inline, render_latex, render_plain
from llt_ribbon.schemas.command import Command, OutputFormat, Verb
from llt_ribbon.schemas.symfunc import OracleResult, SymFuncPayload
from llt_ribbon.symfunc import llt_bruteforce, monomial_to_schur, partition_coloring_count


logger = logging.getLogger(__name__)


def at_q1(f: SymFunc) -> SymFunc:
    return f.map_coefficients(lambda c: QPoly.constant(c.eval_at_one()))


@click.command(epilog=f"LITERAL: {GRAPH_GRAMMAR}")
@click.argument("literal")
@click.option("--limit", "--max-vertices", "limit", type=click.IntRange(min=1), help="Brute-force size limit.")
@click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default="plain", show_default=True)
@click.option("--at-q1", "at_one", is_flag=True, help="Print coefficients evaluated at q = 1.")
@click.option("--workers", type=click.IntRange(min=1), help="Worker processes for the enumeration.")
@click.option("--check-symmetry", is_flag=True, help="Also enumerate permuted contents and compare.")
@click.pass_context
@handle_errors
def oracle(
    ctx: click.Context,
    literal: str,
    limit: Optional[int],
    fmt: str,
    at_one: bool,
    workers: Optional[int],
    check_symmetry: bool,
):
    """Compute LLT_G for the graph LITERAL by enumerating colorings."""
    command = Command(verb=Verb.ORACLE, target=literal, format=fmt, limit=limit)
    graph = parse_graph(command.target)

    start = time.perf_counter()
    monomial = llt_bruteforce(
        graph.area,
        limit=resolve_limit(ctx, command.limit),
        check_symmetry=check_symmetry,
        workers=workers,
    )
    schur = monomial_to_schur(monomial)
    seconds = time.perf_counter() - start
    colorings = partition_coloring_count(graph.area.n)
    logger.info("oracle %s: %d colorings in %.3fs", literal, colorings, seconds)

    if at_one:
        monomial, schur = at_q1(monomial), at_q1(schur)

    if command.format is OutputFormat.JSON:
        result = OracleResult(
            graph=literal,
            area=list(graph.area.a),
            colorings=colorings,
            seconds=seconds,
            monomial=SymFuncPayload.from_symfunc(monomial),
            schur=SymFuncPayload.from_symfunc(schur),
        )
        click.echo(result.model_dump_json())
        return

    if command.format is OutputFormat.LATEX:
        click.echo(f"% {literal} {graph.area}: {colorings} colorings in {seconds:.3f}s")
        click.echo(render_latex(monomial))
        click.echo(render_latex(schur))
        return

    click.echo(f"graph: {literal} {graph.area}")
    click.echo("monomial:")
    click.echo(render_plain(monomial))
    click.echo("schur:")
    click.echo(render_plain(schur))
    click.echo(f"inline: {render_inline(schur)}")
    click.echo(f"colorings: {colorings}")
    click.echo(f"seconds: {seconds:.3f}")
