"""
Text renderings of symmetric functions: plain, inline, LaTeX and JSON.

Terms always appear in reverse-lexicographic order of partitions and
q-terms by ascending degree, so output is stable across runs.
"""
from llt_ribbon.models.composition import Partition
from llt_ribbon.models.qpoly import QPoly
from llt_ribbon.models.symfunc import SymFunc
from llt_ribbon.schemas.command import OutputFormat
from llt_ribbon.schemas.symfunc import SymFuncPayload, partition_key


def basis_label(f: SymFunc, lam: Partition) -> str:
    """s[3,2] or m[1,1]."""
    return f"{f.basis.symbol}[{partition_key(lam)}]"


def render_plain(f: SymFunc) -> str:
    """One line per term: s[3,2]: 3*q^2 + 2*q^3."""
    if f.is_zero():
        return "0"
    return "\n".join(f"{basis_label(f, lam)}: {c.to_plain()}" for lam, c in f.items())


def _inline_term(label: str, c: QPoly) -> str:
    if c == 1:
        return label
    if c.is_single_term():
        return f"{c.to_plain()}*{label}"
    return f"({c.to_plain()})*{label}"


def render_inline(f: SymFunc) -> str:
    """A single expression: s[2] + q*s[1,1]."""
    if f.is_zero():
        return "0"
    out = []
    for lam, c in f.items():
        label = basis_label(f, lam)
        negative = c.is_single_term() and next(c.terms())[1] < 0
        term = _inline_term(label, -c if negative else c)
        if not out:
            out.append(f"-{term}" if negative else term)
        else:
            out.append(f" - {term}" if negative else f" + {term}")
    return "".join(out)


def render_latex(f: SymFunc) -> str:
    r"""\left(3q^{2}+2q^{3}\right)s_{(3,2)}, terms joined by +."""
    if f.is_zero():
        return "0"
    terms = []
    for lam, c in f.items():
        label = f"{f.basis.symbol}_{{({partition_key(lam)})}}"
        terms.append(label if c == 1 else rf"\left({c.to_latex()}\right){label}")
    return "+".join(terms)


def render_json(f: SymFunc) -> str:
    return SymFuncPayload.from_symfunc(f).model_dump_json()


def parse_json(text: str) -> SymFunc:
    """Inverse of render_json."""
    return SymFuncPayload.model_validate_json(text).to_symfunc()


def render(f: SymFunc, fmt: OutputFormat = OutputFormat.PLAIN) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.LATEX:
        return render_latex(f)
    if fmt is OutputFormat.JSON:
        return render_json(f)
    return render_plain(f)
