"""
Compositions, partitions and standard Young tableaux.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Tuple

from llt_ribbon.core.errors import DomainError


# Sorted 1-based positions in [n-1]
Subset = FrozenSet[int]

# Weight lists a, b, v, w (nonnegative entries)
IntList = Tuple[int, ...]


@dataclass(frozen=True)
class Composition:
    """An ordered list of positive integers; the empty composition has size 0."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise DomainError(f"composition parts must be positive: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class Partition(Composition):
    """A composition with weakly decreasing parts."""

    def __post_init__(self):
        super().__post_init__()
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError(f"partition parts must weakly decrease: {self.parts}")

    @classmethod
    def sorted_from(cls, values: Iterable[int]) -> "Partition":
        """Sort nonzero values into a partition (exponent vector to its orbit)."""
        return cls(tuple(sorted((v for v in values if v), reverse=True)))


@dataclass(frozen=True)
class Tableau:
    """
    A standard Young tableau: rows of a Young diagram filled with 1..n,
    strictly increasing along rows and down columns.
    """
    rows: Tuple[Tuple[int, ...], ...]
    _positions: Dict[int, Tuple[int, int]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)

        if any(not row for row in rows):
            raise DomainError("tableau rows must be nonempty")
        # Raises if the row lengths are not a partition
        Partition(tuple(len(row) for row in rows))

        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise DomainError(f"tableau must contain 1..n exactly once: {rows}")

        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise DomainError(f"tableau rows must strictly increase: {rows}")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise DomainError(f"tableau columns must strictly increase: {rows}")

        positions = {
            value: (r, c)
            for r, row in enumerate(rows)
            for c, value in enumerate(row)
        }
        object.__setattr__(self, "_positions", positions)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return len(self._positions)

    def row_of(self, value: int) -> int:
        """0-based row index holding value."""
        try:
            return self._positions[value][0]
        except KeyError:
            raise DomainError(f"{value} is not an entry of the tableau") from None

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.rows) + "]"
