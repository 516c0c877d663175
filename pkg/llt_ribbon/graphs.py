"""
Constructors and operations on unit interval graphs.

Graphs are handled as AreaSequence values; EdgeSet is only a view used by
edges_of/area_of and by the reversal that defines the transpose.
"""
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from llt_ribbon.core.errors import DomainError, InvalidGraphError
from llt_ribbon.models.composition import IntList
from llt_ribbon.models.graph import AreaSequence, EdgeSet


class LollipopParams(NamedTuple):
    """Parameters of the melting lollipop L_{m,n}^{(k)} = P_{n+1} + K_m^{(k)}."""
    m: int
    n: int
    k: int


class TwoHeadedParams(NamedTuple):
    """Parameters of the two-headed melting lollipop (K_{m1}^{(k1)})^r + P_{n+2} + K_{m2}^{(k2)}."""
    m1: int
    k1: int
    n: int
    m2: int
    k2: int

    @property
    def vertices(self) -> int:
        return self.m1 + self.n + self.m2


FamilyParams = Union[LollipopParams, TwoHeadedParams]


def edges_of(a: AreaSequence) -> EdgeSet:
    """E = {(i, j) : i < j <= i + a_i}."""
    return EdgeSet(
        frozenset((i, j) for i, ai in enumerate(a.a, start=1) for j in range(i + 1, i + ai + 1)),
        a.n,
    )


def area_of(edges: EdgeSet) -> AreaSequence:
    """a_i = max({0} u {j - i : (i, j) in E}); E must be unit-interval closed."""
    if not edges.is_unit_interval():
        raise InvalidGraphError(f"edge set is not unit-interval closed: {edges.sorted()}")
    reach = [0] * (edges.n - 1)
    for i, j in edges.edges:
        reach[i - 1] = max(reach[i - 1], j - i)
    return AreaSequence(tuple(reach), edges.n)


def reverse_edges(edges: EdgeSet) -> EdgeSet:
    """E(G^r) = {(n+1-j, n+1-i) : (i, j) in E(G)}."""
    n = edges.n
    return EdgeSet(frozenset((n + 1 - j, n + 1 - i) for i, j in edges.edges), n)


def transpose(a: AreaSequence) -> AreaSequence:
    """a^T: the area sequence of the reversed graph."""
    return area_of(reverse_edges(edges_of(a)))


def graph_concat(g: AreaSequence, h: AreaSequence) -> AreaSequence:
    """
    G + H on n+m-1 vertices, vertex n of G glued to vertex 1 of H.

    Vertex n of G has no edge to the right inside G, so the area lists
    simply follow each other.
    """
    return AreaSequence(g.a + h.a, g.n + h.n - 1)


def graph_union(g: AreaSequence, h: AreaSequence) -> AreaSequence:
    """Disjoint union on n+m vertices: (a(g), 0, a(h))."""
    return AreaSequence(g.a + (0,) + h.a, g.n + h.n)


def path(n: int) -> AreaSequence:
    """P_n, edges (i, i+1) for 1 <= i <= n-1."""
    if n < 1:
        raise DomainError(f"path needs n >= 1, got {n}")
    return AreaSequence((1,) * (n - 1), n)


def complete(m: int) -> AreaSequence:
    """K_m."""
    if m < 1:
        raise DomainError(f"complete graph needs m >= 1, got {m}")
    return AreaSequence(tuple(range(m - 1, 0, -1)), m)


def melting_complete(m: int, k: int) -> AreaSequence:
    """K_m^{(k)}: K_m without the edges (1,m), (1,m-1), ..., (1,m-k+1)."""
    if m < 1:
        raise DomainError(f"melting complete graph needs m >= 1, got {m}")
    if not 0 <= k <= m - 1:
        raise DomainError(f"melting complete graph needs 0 <= k <= {m - 1}, got k={k}")
    if m == 1:
        return AreaSequence((), 1)
    return AreaSequence((m - 1 - k,) + tuple(range(m - 2, 0, -1)), m)


def melting_lollipop(m: int, n: int, k: int) -> AreaSequence:
    """L_{m,n}^{(k)} = P_{n+1} + K_m^{(k)} on n+m vertices."""
    if n < 0:
        raise DomainError(f"melting lollipop needs n >= 0, got {n}")
    return graph_concat(path(n + 1), melting_complete(m, k))


def two_headed(m1: int, k1: int, n: int, m2: int, k2: int) -> AreaSequence:
    """(K_{m1}^{(k1)})^r + P_{n+2} + K_{m2}^{(k2)} on m1+n+m2 vertices; n = -1 shares one vertex."""
    if n < -1:
        raise DomainError(f"two-headed melting lollipop needs n >= -1, got {n}")
    left = transpose(melting_complete(m1, k1))
    right = melting_complete(m2, k2)
    return graph_concat(graph_concat(left, path(n + 2)), right)


def modified_sequence_b(m1: int, k1: int, n: int, m2: int, k2: int) -> IntList:
    """
    The exponent weights of the two-headed expansion:
    (1, 2, ..., m1-2, m1-k1-1, a_{m1}, a_{m1+1}, ...); equal to a when m1 = 1.
    """
    a = two_headed(m1, k1, n, m2, k2).a
    if m1 == 1:
        return a
    return tuple(range(1, m1 - 1)) + (m1 - k1 - 1,) + a[m1 - 1:]


def _lollipops_on(total: int) -> Iterator[LollipopParams]:
    for m in range(1, total + 1):
        for k in range(m):
            yield LollipopParams(m, total - m, k)


def _two_headed_on(total: int) -> Iterator[TwoHeadedParams]:
    # n = total - m1 - m2 >= -1
    for m1 in range(1, total + 1):
        for m2 in range(1, total + 2 - m1):
            for k1 in range(m1):
                for k2 in range(m2):
                    yield TwoHeadedParams(m1, k1, total - m1 - m2, m2, k2)


def lollipop_parameters(max_vertices: int) -> List[LollipopParams]:
    """Every (m, n, k) with 1 <= n+m <= max_vertices, by total, then m, then k."""
    return [p for total in range(1, max_vertices + 1) for p in _lollipops_on(total)]


def two_headed_parameters(max_vertices: int) -> List[TwoHeadedParams]:
    """Every (m1, k1, n, m2, k2) with n >= -1 and m1+n+m2 <= max_vertices."""
    return [p for total in range(1, max_vertices + 1) for p in _two_headed_on(total)]


def _area_sequences(n: int, i: int, prev: int) -> Iterator[Tuple[int, ...]]:
    if i == n:
        yield ()
        return
    for ai in range(max(0, prev - 1), n - i + 1):
        for rest in _area_sequences(n, i + 1, ai):
            yield (ai,) + rest


def enumerate_area_sequences(n: int) -> List[AreaSequence]:
    """All unit interval graphs on n vertices, lexicographic in the area list."""
    if n < 1:
        raise DomainError(f"graphs need n >= 1, got {n}")
    return [AreaSequence(a, n) for a in _area_sequences(n, 1, 0)]


def identify_family(a: AreaSequence) -> Optional[FamilyParams]:
    """
    Parameters of a melting lollipop (preferred) or two-headed melting
    lollipop whose area sequence is a, or None.
    """
    for params in _lollipops_on(a.n):
        if melting_lollipop(*params) == a:
            return params
    for params in _two_headed_on(a.n):
        if two_headed(*params) == a:
            return params
    return None


def family_area(params: FamilyParams) -> AreaSequence:
    if isinstance(params, LollipopParams):
        return melting_lollipop(*params)
    return two_headed(*params)


def area_sequences_upto(max_vertices: int) -> Iterable[AreaSequence]:
    for n in range(1, max_vertices + 1):
        yield from enumerate_area_sequences(n)
