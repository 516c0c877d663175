"""
Unit interval graphs, stored canonically as area sequences.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from llt_ribbon.core.errors import InvalidGraphError


Edge = Tuple[int, int]


@dataclass(frozen=True)
class AreaSequence:
    """
    Area sequence (a_1, ..., a_{n-1}) of a unit interval graph on n vertices;
    a_i is the furthest reach j - i of an edge (i, j), or 0.
    """
    a: Tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.n < 1:
            raise InvalidGraphError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.a) != self.n - 1:
            raise InvalidGraphError(
                f"area sequence of a {self.n}-vertex graph has {self.n - 1} entries, got {len(self.a)}"
            )
        for i, ai in enumerate(self.a, start=1):
            if not 0 <= ai <= self.n - i:
                raise InvalidGraphError(f"a_{i}={ai} outside [0, {self.n - i}]")
        for i in range(1, len(self.a)):
            if self.a[i] < self.a[i - 1] - 1:
                raise InvalidGraphError(
                    f"a_{i + 1}={self.a[i]} < a_{i}-1={self.a[i - 1] - 1}: not unit-interval closed"
                )

    @classmethod
    def of(cls, values: Iterable[int]) -> "AreaSequence":
        values = tuple(values)
        return cls(values, len(values) + 1)

    def __getitem__(self, i: int) -> int:
        """1-based access; the last vertex reads as 0 (it has no edge to the right)."""
        if i == self.n:
            return 0
        if not 1 <= i < self.n:
            raise IndexError(f"area index {i} outside [1, {self.n}]")
        return self.a[i - 1]

    def __iter__(self):
        return iter(self.a)

    def __len__(self) -> int:
        return len(self.a)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.a)) + ")"


@dataclass(frozen=True)
class EdgeSet:
    """Edges (i, j), 1 <= i < j <= n; a derived view of an area sequence."""
    edges: FrozenSet[Edge]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((int(i), int(j)) for i, j in self.edges))
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise InvalidGraphError(f"edge {(i, j)} outside 1 <= i < j <= {self.n}")

    def is_unit_interval(self) -> bool:
        """(i, j) in E and i <= k < l <= j imply (k, l) in E."""
        return all(
            (k, l) in self.edges
            for i, j in self.edges
            for k in range(i, j)
            for l in range(k + 1, j + 1)
        )

    def sorted(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))
