"""
Tests for area sequences and the graph constructions.
"""
import pytest
from hypothesis import given, strategies as st

from llt_ribbon.core.errors import DomainError, InvalidGraphError
from llt_ribbon.graphs import (
    LollipopParams, TwoHeadedParams, area_of, complete, edges_of,
    enumerate_area_sequences, graph_concat, graph_union, identify_family,
    lollipop_parameters, melting_complete, melting_lollipop,
    modified_sequence_b, path, transpose, two_headed, two_headed_parameters,
)
from llt_ribbon.models.graph import AreaSequence, EdgeSet


A = AreaSequence.of

area_sequences = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.sampled_from(enumerate_area_sequences(n))
)


def test_area_sequence_validation():
    """Entries must stay in range and drop by at most one."""
    with pytest.raises(InvalidGraphError):
        A((0, 2))
    with pytest.raises(InvalidGraphError):
        A((2, 0, 1))
    with pytest.raises(InvalidGraphError):
        AreaSequence((1, 1), 2)


def test_area_sequence_reads_last_vertex_as_zero():
    """a_n reads as 0; indices past n raise."""
    a = A((2, 1, 2, 1))
    assert a[1] == 2
    assert a[5] == 0
    with pytest.raises(IndexError):
        a[6]


def test_edges_of(example_graph):
    """Edges (i, j) with j <= i + a_i."""
    assert edges_of(example_graph).edges == frozenset({
        (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5),
    })
    assert edges_of(A((0,))).edges == frozenset()
    assert edges_of(path(4)).edges == frozenset({(1, 2), (2, 3), (3, 4)})


def test_area_of():
    """area_of reads furthest reaches back off an edge set."""
    assert area_of(edges_of(complete(3))) == A((2, 1))
    assert area_of(EdgeSet(frozenset(), 4)) == A((0, 0, 0))


def test_area_of_rejects_open_edge_sets():
    """Edge sets that are not unit-interval closed are rejected."""
    with pytest.raises(InvalidGraphError):
        area_of(EdgeSet(frozenset({(1, 3)}), 3))


@given(area_sequences)
def test_edges_round_trip(a):
    """area_of inverts edges_of."""
    assert area_of(edges_of(a)) == a


def test_transpose(example_graph):
    """The reversed graph of (2,2,1,1) has area sequence (1,2,2,1)."""
    assert transpose(example_graph) == A((1, 2, 2, 1))
    assert transpose(path(5)) == path(5)
    assert transpose(complete(5)) == complete(5)


@given(area_sequences)
def test_transpose_is_an_involution(a):
    """Transposing twice gives a back."""
    assert transpose(transpose(a)) == a


def test_graph_concat():
    """L_{5,3}^{(2)} = P_4 + K_5^{(2)} on 8 vertices."""
    assert graph_concat(path(4), melting_complete(5, 2)) == A((1, 1, 1, 2, 3, 2, 1))
    g = A((2, 1, 1))
    assert graph_concat(g, path(1)) == g
    assert graph_concat(path(1), g) == g


def test_graph_union():
    """Disjoint union inserts a zero between the area lists."""
    assert graph_union(path(2), path(2)) == A((1, 0, 1))
    assert graph_union(A((2, 1)), path(1)) == A((2, 1, 0))
    assert graph_union(path(3), complete(4)) == A((1, 1, 0, 3, 2, 1))


def test_melting_complete():
    """K_m^(k) removes the k outermost edges."""
    assert melting_complete(5, 2) == A((2, 3, 2, 1))
    assert melting_complete(4, 0) == complete(4)
    assert melting_complete(2, 1) == A((0,))
    with pytest.raises(DomainError):
        melting_complete(3, 3)


def test_melting_lollipop():
    """Melting lollipops with k = 0 and m = 1 reduce to complete graphs and paths."""
    assert melting_lollipop(5, 3, 2) == A((1, 1, 1, 2, 3, 2, 1))
    assert melting_lollipop(1, 4, 0) == path(5)
    assert melting_lollipop(4, 0, 0) == complete(4)


def test_two_headed(example_two_headed):
    """Both worked examples of the two-headed family."""
    assert example_two_headed == A((2, 1, 2, 1))
    assert two_headed(4, 1, 1, 5, 2) == A((2, 2, 1, 1, 1, 2, 3, 2, 1))
    assert two_headed(4, 1, 1, 5, 2).n == 10
    with pytest.raises(DomainError):
        two_headed(3, 0, -2, 3, 0)


def test_modified_sequence_b():
    """b replaces the first head by (1, ..., m1-2, m1-k1-1)."""
    assert modified_sequence_b(3, 0, -1, 3, 0) == (1, 2, 2, 1)
    assert modified_sequence_b(1, 0, 2, 4, 1) == two_headed(1, 0, 2, 4, 1).a
    assert modified_sequence_b(2, 1, 0, 3, 0)[0] == 0


def test_parameter_grids():
    """Grids list every parameter tuple with the given vertex bound."""
    assert lollipop_parameters(2) == [
        LollipopParams(1, 0, 0), LollipopParams(1, 1, 0),
        LollipopParams(2, 0, 0), LollipopParams(2, 0, 1),
    ]
    grid = two_headed_parameters(5)
    assert TwoHeadedParams(3, 0, -1, 3, 0) in grid
    assert all(p.vertices <= 5 and p.n >= -1 for p in grid)


def test_enumerate_area_sequences_catalan():
    """There are Catalan-many area sequences on n vertices."""
    assert [len(enumerate_area_sequences(n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_identify_family():
    """Lollipops are preferred; unsupported graphs give None."""
    assert identify_family(A((2, 1, 2, 1))) == TwoHeadedParams(3, 0, -1, 3, 0)
    assert identify_family(path(4)) == LollipopParams(1, 3, 0)
    assert identify_family(A((1, 1, 1, 2, 3, 2, 1))) == LollipopParams(5, 3, 2)
    assert identify_family(A((2, 2, 2, 1))) is None
    assert identify_family(A((0, 0))) == TwoHeadedParams(2, 1, -1, 2, 1)


@pytest.mark.parametrize("m", range(2, 8))
@pytest.mark.parametrize("n", range(0, 5))
def test_fully_melted_lollipop_is_a_union(m, n):
    """Melting every edge at the first vertex splits off K_{m-1}: L_{m,n}^(m-1) = P_{n+1} u K_{m-1}."""
    assert melting_lollipop(m, n, m - 1) == graph_union(path(n + 1), complete(m - 1))


@pytest.mark.parametrize("m", range(2, 8))
@pytest.mark.parametrize("n", range(0, 5))
def test_lollipop_melted_to_one_edge_is_a_longer_lollipop(m, n):
    """L_{m,n}^(m-2) = L_{m-1,n+1}^(0)."""
    assert melting_lollipop(m, n, m - 2) == melting_lollipop(m - 1, n + 1, 0)


def test_two_headed_melted_to_one_edge_is_a_longer_stick():
    """A second head melted to one edge joins the path: m2 drops by one and n grows by one."""
    grid = [p for p in two_headed_parameters(7) if p.m2 >= 2 and p.k2 == p.m2 - 2]
    assert grid
    for p in grid:
        assert two_headed(p.m1, p.k1, p.n, p.m2, p.k2) == two_headed(p.m1, p.k1, p.n + 1, p.m2 - 1, 0)
