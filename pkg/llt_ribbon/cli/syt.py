"""
syt: standard Young tableaux with their descent sets and q-exponents.
"""
from typing import List, Optional

import click

from llt_ribbon.cli.dependencies import handle_errors
from llt_ribbon.cli.literals import parse_int_list
from llt_ribbon.combinatorics import (
    check_weights, descent_set, enumerate_partitions, enumerate_syt, set_of,
    weighted_sum,
)
from llt_ribbon.core.errors import DomainError, LiteralSyntaxError
from llt_ribbon.models.composition import Composition, Partition, Subset, Tableau
from llt_ribbon.models.qpoly import QPoly
from llt_ribbon.schemas.command import Command, Verb


def format_descents(descents: Subset) -> str:
    return "D={" + ",".join(map(str, sorted(descents))) + "}"


def tableaux_for(shape: str, as_composition: bool) -> List[Tableau]:
    """SYT of a partition, or every SYT whose descent set is set(alpha)."""
    parts = parse_int_list(shape, "shape")
    if not parts:
        raise LiteralSyntaxError("shape must have at least one part, e.g. 3,2")
    if not as_composition:
        return enumerate_syt(Partition(parts))
    alpha = Composition(parts)
    target = set_of(alpha)
    return [
        tableau
        for lam in enumerate_partitions(alpha.size)
        for tableau in enumerate_syt(lam)
        if descent_set(tableau) == target
    ]


@click.command()
@click.argument("shape")
@click.option("--composition", "as_composition", is_flag=True, help="Read SHAPE as a composition alpha.")
@click.option("--weights", help="Weights w1,...,w_{n-1}; prints q^{w(D(T))}.")
@click.option("--descents", help="Only tableaux with this descent set, e.g. 1,3.")
@handle_errors
def syt(shape: str, as_composition: bool, weights: Optional[str], descents: Optional[str]):
    """List the standard Young tableaux of SHAPE with their descent sets."""
    Command(verb=Verb.SYT, target=shape)
    tableaux = tableaux_for(shape, as_composition)
    n = tableaux[0].size if tableaux else sum(parse_int_list(shape))

    w = None
    if weights is not None:
        w = check_weights(parse_int_list(weights, "weights"))
        if len(w) != n - 1:
            raise DomainError(f"a shape of size {n} needs {n - 1} weights, got {len(w)}")
    if descents is not None:
        wanted = frozenset(parse_int_list(descents, "descent set"))
        tableaux = [t for t in tableaux if descent_set(t) == wanted]

    for tableau in tableaux:
        d = descent_set(tableau)
        line = f"{tableau}  {format_descents(d)}"
        if w is not None:
            line += f"  {QPoly.monomial(weighted_sum(w, d)).to_plain()}"
        click.echo(line)
