"""
expand: the Schur (or monomial) expansion of a graph's LLT polynomial.
"""
import logging
from typing import Optional

import click

from llt_ribbon.cli.dependencies import handle_errors, resolve_limit
from llt_ribbon.cli.literals import GRAPH_GRAMMAR, GraphLiteral, parse_graph
from llt_ribbon.core.errors import DomainError
from llt_ribbon.graphs import LollipopParams
from llt_ribbon.models.symfunc import Basis, SymFunc
from llt_ribbon.render import render
from llt_ribbon.schemas.command import Command, OutputFormat, Verb
from llt_ribbon.schemas.symfunc import ExpansionPayload, Method, SymFuncPayload
from llt_ribbon.symfunc import llt_bruteforce, monomial_to_schur, schur_to_monomial
from llt_ribbon.theorems import formula_melting_lollipop, formula_two_headed


logger = logging.getLogger(__name__)


def expand_graph(graph: GraphLiteral, *, bruteforce: bool, limit: int) -> SymFunc:
    """Formula first; brute force only when asked for."""
    if bruteforce:
        return monomial_to_schur(llt_bruteforce(graph.area, limit=limit))
    if graph.family is None:
        raise DomainError(
            f"{graph.text} {graph.area} is neither a melting lollipop nor a two-headed "
            f"melting lollipop, so no closed formula applies; pass --bruteforce to "
            f"enumerate colorings (up to {limit} vertices)"
        )
    if isinstance(graph.family, LollipopParams):
        return formula_melting_lollipop(*graph.family)
    return formula_two_headed(*graph.family)


@click.command(epilog=f"LITERAL: {GRAPH_GRAMMAR}")
@click.argument("literal")
@click.option("--basis", type=click.Choice([b.value for b in Basis]), default=Basis.SCHUR.value, show_default=True)
@click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default="plain", show_default=True)
@click.option("--bruteforce", is_flag=True, help="Enumerate colorings instead of using a closed formula.")
@click.option("--max-vertices", type=click.IntRange(min=1), help="Brute-force size limit.")
@click.pass_context
@handle_errors
def expand(
    ctx: click.Context,
    literal: str,
    basis: str,
    fmt: str,
    bruteforce: bool,
    max_vertices: Optional[int],
):
    """Expand LLT_G for the graph LITERAL."""
    command = Command(
        verb=Verb.EXPAND, target=literal, basis=basis, format=fmt,
        limit=max_vertices, bruteforce=bruteforce,
    )
    graph = parse_graph(command.target)
    method = Method.BRUTEFORCE if command.bruteforce else Method.FORMULA
    expansion = expand_graph(graph, bruteforce=command.bruteforce, limit=resolve_limit(ctx, command.limit))
    if command.basis is Basis.MONOMIAL:
        expansion = schur_to_monomial(expansion)
    logger.info("expanded %s by %s", literal, method.value)

    if command.format is OutputFormat.JSON:
        payload = ExpansionPayload(
            graph=literal,
            area=list(graph.area.a),
            method=method,
            family=graph.family._asdict() if graph.family else {},
            expansion=SymFuncPayload.from_symfunc(expansion),
        )
        click.echo(payload.model_dump_json())
    elif command.format is OutputFormat.LATEX:
        click.echo(f"% method: {method.value}")
        click.echo(render(expansion, OutputFormat.LATEX))
    else:
        click.echo(f"method: {method.value}")
        click.echo(render(expansion, OutputFormat.PLAIN))
