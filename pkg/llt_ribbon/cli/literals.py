"""
Parsing of command-line literals: graphs, shapes, integer lists and triples.
"""
from typing import NamedTuple, Optional, Tuple

from llt_ribbon.core.errors import LiteralSyntaxError
from llt_ribbon.graphs import (
    FamilyParams, LollipopParams, TwoHeadedParams, complete, family_area,
    identify_family, melting_complete, path,
)
from llt_ribbon.models.graph import AreaSequence


GRAPH_GRAMMAR = (
    "path:n | complete:m | meltcomplete:m,k | lollipop:m,n,k | "
    "twoheaded:m1,k1,n,m2,k2 | area:c1,c2,..."
)

# kind -> number of integer arguments (None: any)
_ARITY = {
    "path": 1,
    "complete": 1,
    "meltcomplete": 2,
    "lollipop": 3,
    "twoheaded": 5,
    "area": None,
}


class GraphLiteral(NamedTuple):
    """A parsed graph literal and, when it has one, its family parameters."""
    text: str
    area: AreaSequence
    family: Optional[FamilyParams]


def parse_int_list(text: str, what: str = "list") -> Tuple[int, ...]:
    """'1,2,2,1' -> (1, 2, 2, 1); the empty string is the empty list."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise LiteralSyntaxError(f"cannot parse {what} {text!r}; expected integers separated by commas")


def parse_graph(text: str) -> GraphLiteral:
    """Parse a graph literal into its area sequence."""
    kind, sep, rest = text.strip().partition(":")
    if not sep or kind not in _ARITY:
        raise LiteralSyntaxError(f"cannot parse graph {text!r}; expected {GRAPH_GRAMMAR}")
    try:
        args = parse_int_list(rest, "graph arguments")
    except LiteralSyntaxError:
        raise LiteralSyntaxError(f"cannot parse graph {text!r}; expected {GRAPH_GRAMMAR}")
    arity = _ARITY[kind]
    if arity is not None and len(args) != arity:
        raise LiteralSyntaxError(
            f"{kind} takes {arity} argument{'s' if arity > 1 else ''}, got {len(args)}; "
            f"expected {GRAPH_GRAMMAR}"
        )

    if kind == "area":
        area = AreaSequence.of(args)
        return GraphLiteral(text, area, identify_family(area))
    if kind == "path":
        area = path(*args)
        family: FamilyParams = LollipopParams(1, args[0] - 1, 0)
    elif kind == "complete":
        area = complete(*args)
        family = LollipopParams(args[0], 0, 0)
    elif kind == "meltcomplete":
        area = melting_complete(*args)
        family = LollipopParams(args[0], 0, args[1])
    elif kind == "lollipop":
        family = LollipopParams(*args)
        area = family_area(family)
    else:
        family = TwoHeadedParams(*args)
        area = family_area(family)
    return GraphLiteral(text, area, family)


def parse_triple(text: str) -> Tuple[AreaSequence, AreaSequence, AreaSequence]:
    """'A/A1/A2' with each part an area list, e.g. '1,3,2,1/1,2,2,1/1,1,2,1'."""
    parts = text.split("/")
    if len(parts) != 3:
        raise LiteralSyntaxError(
            f"cannot parse triple {text!r}; expected three area lists separated by '/'"
        )
    a, a1, a2 = (AreaSequence.of(parse_int_list(p, "area list")) for p in parts)
    return a, a1, a2
