"""
Tests for the plain, inline, LaTeX and JSON renderings.
"""
import json

import pytest
from pydantic import ValidationError

from llt_ribbon.models.composition import Partition
from llt_ribbon.models.qpoly import ONE, Q, QPoly
from llt_ribbon.models.symfunc import Basis, SymFunc
from llt_ribbon.render import (
    basis_label, parse_json, render, render_inline, render_json, render_latex, render_plain,
)
from llt_ribbon.schemas.command import OutputFormat


P = Partition.of

S32 = SymFunc(5, Basis.SCHUR, {P(3, 2): QPoly({2: 3, 3: 2})})
LLT_P2 = SymFunc(2, Basis.SCHUR, {P(2): 1, P(1, 1): Q})


def test_basis_label():
    """Labels read s[...] or m[...]."""
    assert basis_label(S32, P(3, 2)) == "s[3,2]"
    assert basis_label(SymFunc.zero(2, Basis.MONOMIAL), P(1, 1)) == "m[1,1]"


def test_render_plain():
    """Plain rendering prints one term per line."""
    assert render_plain(S32) == "s[3,2]: 3*q^2 + 2*q^3"
    assert render_plain(LLT_P2) == "s[2]: 1\ns[1,1]: q"
    assert render_plain(SymFunc.zero(3, Basis.SCHUR)) == "0"


def test_render_inline():
    """Inline rendering parenthesises multi-term coefficients."""
    assert render_inline(LLT_P2) == "s[2] + q*s[1,1]"
    f = SymFunc(2, Basis.MONOMIAL, {P(2): 1, P(1, 1): ONE + Q})
    assert render_inline(f) == "m[2] + (1 + q)*m[1,1]"
    g = SymFunc(2, Basis.SCHUR, {P(2): 1, P(1, 1): -1})
    assert render_inline(g) == "s[2] - s[1,1]"
    assert render_inline(-LLT_P2) == "-s[2] - q*s[1,1]"


def test_render_latex():
    """LaTeX rendering wraps non-unit coefficients."""
    assert render_latex(S32) == r"\left(3q^{2}+2q^{3}\right)s_{(3,2)}"
    assert render_latex(LLT_P2) == r"s_{(2)}+\left(q\right)s_{(1,1)}"


def test_render_json():
    """JSON rendering matches the payload schema."""
    assert render_json(S32) == '{"degree":5,"basis":"schur","coeffs":{"3,2":{"2":3,"3":2}}}'


@pytest.mark.parametrize("f", [S32, LLT_P2, SymFunc.zero(4, Basis.MONOMIAL), SymFunc.one()])
def test_parse_json_inverts_render_json(f):
    """parse_json reads back what render_json writes."""
    assert parse_json(render_json(f)) == f


def test_parse_json_rejects_bad_payloads():
    """Negative degrees and unknown bases are rejected."""
    with pytest.raises(ValidationError):
        parse_json('{"degree":-1,"basis":"schur","coeffs":{}}')
    with pytest.raises(ValidationError):
        parse_json('{"degree":2,"basis":"elementary","coeffs":{}}')


def test_render_dispatch():
    """render picks the renderer for each format."""
    assert render(S32) == render_plain(S32)
    assert render(S32, OutputFormat.LATEX) == render_latex(S32)
    assert json.loads(render(S32, "json"))["degree"] == 5
