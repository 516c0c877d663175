"""
Operations on compositions, partitions and standard Young tableaux.

Subsets of [n-1] are frozensets of 1-based positions, matching set(alpha).
"""
from functools import lru_cache
from itertools import accumulate, combinations
from math import factorial, prod
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.utilities.iterables import partitions

from llt_ribbon.core.errors import DomainError
from llt_ribbon.models.composition import (
    Composition, IntList, Partition, Subset, Tableau,
)


def set_of(alpha: Composition) -> Subset:
    """Partial sums alpha_1, alpha_1+alpha_2, ... omitting the total."""
    return frozenset(accumulate(alpha.parts[:-1]))


def composition_of(n: int, subset: Iterable[int]) -> Composition:
    """The unique composition of n whose partial-sum set is subset."""
    if n < 0:
        raise DomainError(f"size must be nonnegative, got {n}")
    cuts = sorted(set(subset))
    if any(s < 1 or s > n - 1 for s in cuts):
        raise DomainError(f"subset {cuts} is not contained in [1, {n - 1}]")
    if n == 0:
        return Composition(())
    bounds = [0, *cuts, n]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def concat(alpha: Composition, beta: Composition) -> Composition:
    """alpha . beta: parts of alpha followed by parts of beta."""
    return Composition(alpha.parts + beta.parts)


def near_concat(alpha: Composition, beta: Composition) -> Composition:
    """alpha (.) beta: the last part of alpha merged with the first part of beta."""
    if not alpha.parts:
        return beta
    if not beta.parts:
        return alpha
    merged = alpha.parts[-1] + beta.parts[0]
    return Composition(alpha.parts[:-1] + (merged,) + beta.parts[1:])


def reverse(alpha: Composition) -> Composition:
    return Composition(alpha.parts[::-1])


def check_weights(values: Iterable[int]) -> IntList:
    """Validate a weight list; entries must be nonnegative integers."""
    weights = tuple(int(v) for v in values)
    if any(v < 0 for v in weights):
        raise DomainError(f"weights must be nonnegative: {weights}")
    return weights


def weighted_sum(v: Sequence[int], subset: Iterable[int]) -> int:
    """v(S): the sum of v_s over s in S, positions 1-based."""
    total = 0
    for s in subset:
        if s < 1 or s > len(v):
            raise DomainError(f"position {s} outside [1, {len(v)}]")
        total += v[s - 1]
    return total


@lru_cache(maxsize=None)
def _partitions(n: int) -> Tuple[Partition, ...]:
    if n == 0:
        return (Partition(()),)
    # sympy yields multiplicity dicts and reuses the same dict object
    found = [
        tuple(sorted((part for part, mult in p.items() for _ in range(mult)), reverse=True))
        for p in partitions(n)
    ]
    return tuple(Partition(parts) for parts in sorted(found, reverse=True))


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise DomainError(f"size must be nonnegative, got {n}")
    return list(_partitions(n))


def enumerate_compositions(n: int) -> List[Composition]:
    """All compositions of n, ordered by subset size then lexicographically."""
    if n < 0:
        raise DomainError(f"size must be nonnegative, got {n}")
    if n == 0:
        return [Composition(())]
    positions = range(1, n)
    return [
        composition_of(n, subset)
        for size in range(n)
        for subset in combinations(positions, size)
    ]


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when lam >= mu in dominance order (same size required)."""
    if lam.size != mu.size:
        raise DomainError(f"dominance needs equal sizes: {lam} vs {mu}")
    length = max(len(lam), len(mu))
    a = list(accumulate(lam.parts + (0,) * (length - len(lam))))
    b = list(accumulate(mu.parts + (0,) * (length - len(mu))))
    return all(x >= y for x, y in zip(a, b))


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(
        sum(1 for p in lam.parts if p > i) for i in range(lam.parts[0])
    ))


def hook_length_count(lam: Partition) -> int:
    """f^lambda = n! / product of hook lengths."""
    cols = conjugate(lam).parts
    hooks = prod(
        (lam.parts[r] - c - 1) + (cols[c] - r - 1) + 1
        for r in range(len(lam))
        for c in range(lam.parts[r])
    )
    return factorial(lam.size) // hooks


@lru_cache(maxsize=None)
def _syt(shape: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    n = sum(shape)
    rows: List[List[int]] = [[] for _ in shape]
    found: List[Tableau] = []

    def place(value: int) -> None:
        if value > n:
            found.append(Tableau(tuple(tuple(row) for row in rows)))
            return
        # Lower rows first
        for r in range(len(shape) - 1, -1, -1):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(value)
                place(value + 1)
                rows[r].pop()

    place(1)
    return tuple(found)


def enumerate_syt(lam: Partition) -> List[Tableau]:
    """All standard Young tableaux of shape lam, by backtracking over 1..n."""
    return list(_syt(lam.parts))


def descent_set(tableau: Tableau) -> Subset:
    """D(T): the i for which i+1 lies in a later row than i."""
    return frozenset(
        i for i in range(1, tableau.size)
        if tableau.row_of(i + 1) > tableau.row_of(i)
    )


@lru_cache(maxsize=None)
def syt_descent_counts(n: int) -> Dict[Tuple[Subset, Partition], int]:
    """
    {(D, lambda): number of SYT of shape lambda with descent set D}, for all lambda of n.

    Entries 1..n are added one box at a time; a state is the shape so far
    plus the row of the last entry, and descent sets are carried as
    bitmasks, so no Tableau is ever built.
    """
    if n < 0:
        raise DomainError(f"size must be nonnegative, got {n}")
    states: Dict[Tuple[Tuple[int, ...], int], Dict[int, int]] = {((), -1): {0: 1}}
    for value in range(1, n + 1):
        grown: Dict[Tuple[Tuple[int, ...], int], Dict[int, int]] = {}
        for (shape, last), masks in states.items():
            for r in range(len(shape) + 1):
                if r == len(shape):
                    new_shape = shape + (1,)
                elif r == 0 or shape[r - 1] > shape[r]:
                    new_shape = shape[:r] + (shape[r] + 1,) + shape[r + 1:]
                else:
                    continue
                bit = 1 << (value - 2) if value > 1 and r > last else 0
                target = grown.setdefault((new_shape, r), {})
                for mask, count in masks.items():
                    target[mask | bit] = target.get(mask | bit, 0) + count
        states = grown

    counts: Dict[Tuple[Subset, Partition], int] = {}
    for (shape, _), masks in states.items():
        lam = Partition(shape)
        for mask, count in masks.items():
            key = (frozenset(i for i in range(1, n) if mask >> (i - 1) & 1), lam)
            counts[key] = counts.get(key, 0) + count
    return counts
