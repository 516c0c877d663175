"""
Brute-force oracles and basis conversions for symmetric functions.

The coefficient of m_lambda in a symmetric function equals the coefficient
of x_1^{lambda_1} ... x_l^{lambda_l}, so the oracles enumerate exactly the
colorings whose content is lambda (multiset permutations of a word) instead
of all n^n colorings.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache, partial
from itertools import product
from math import factorial, prod
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from sympy.utilities.iterables import multiset_permutations

from llt_ribbon.combinatorics import (
    enumerate_partitions, set_of, syt_descent_counts,
)
from llt_ribbon.core.config import settings
from llt_ribbon.core.errors import BasisMismatchError, NonSymmetricError, check_limit
from llt_ribbon.graphs import edges_of
from llt_ribbon.models.composition import Composition, Partition
from llt_ribbon.models.graph import AreaSequence
from llt_ribbon.models.qpoly import QPoly
from llt_ribbon.models.symfunc import Basis, KostkaMatrix, SymFunc


logger = logging.getLogger(__name__)

# Exponent vector -> coefficient
Content = Tuple[int, ...]
Table = Dict[Content, QPoly]


# Coloring enumeration

def _word(content: Content) -> List[int]:
    return [value for value, mult in enumerate(content) for _ in range(mult)]


def _ascent_counts(pairs: Tuple[Tuple[int, int], ...], content: Content) -> Dict[int, int]:
    """{asc: number of colorings of this content with asc ascents along pairs}."""
    counts: Dict[int, int] = {}
    for word in multiset_permutations(_word(content)):
        asc = 0
        for i, j in pairs:
            if word[i] < word[j]:
                asc += 1
        counts[asc] = counts.get(asc, 0) + 1
    return counts


def _ribbon_count(n: int, rises: FrozenSet[int], content: Content) -> Dict[int, int]:
    """{0: colorings of this content rising exactly on set(alpha)}."""
    count = 0
    for word in multiset_permutations(_word(content)):
        if all(
            (word[i - 1] < word[i]) if i in rises else (word[i - 1] >= word[i])
            for i in range(1, n)
        ):
            count += 1
    return {0: count} if count else {}


def _contents(n: int, check_symmetry: bool) -> List[Content]:
    """Partition contents of size n, plus adjacent transpositions when checking symmetry."""
    contents: List[Content] = []
    for lam in enumerate_partitions(n):
        contents.append(lam.parts)
        if not check_symmetry:
            continue
        padded = list(lam.parts) + [0]
        for i in range(min(len(lam), n - 1)):
            if padded[i] != padded[i + 1]:
                swapped = padded[:]
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                while swapped and swapped[-1] == 0:
                    swapped.pop()
                contents.append(tuple(swapped))
    return contents


def _enumerate(counter, contents: List[Content], workers: int) -> Table:
    """Run counter over every content; the merge follows the order of contents."""
    if workers > 1 and len(contents) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(counter, contents))
    else:
        results = [counter(c) for c in contents]
    return {content: QPoly(counts) for content, counts in zip(contents, results)}


def to_monomial_basis(table: Mapping[Content, QPoly], degree: int) -> SymFunc:
    """
    Read a monomial-basis SymFunc off a table of exponent-vector coefficients.

    Every vector must carry the coefficient of its sorted partition,
    otherwise the table is not symmetric and NonSymmetricError is raised.
    """
    coeffs: Dict[Partition, QPoly] = {}
    others: List[Tuple[Content, QPoly]] = []
    for vector, c in table.items():
        lam = Partition.sorted_from(vector)
        trimmed = tuple(vector)
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        if trimmed == lam.parts:
            coeffs[lam] = c
        else:
            others.append((vector, c))

    for vector, c in others:
        expected = coeffs.get(Partition.sorted_from(vector), QPoly.zero())
        if c != expected:
            raise NonSymmetricError(
                f"coefficient of x^{vector} is {c} but its sorted exponent has {expected}"
            )
    return SymFunc(degree, Basis.MONOMIAL, coeffs)


def partition_coloring_count(n: int) -> int:
    """Number of colorings the oracles visit for degree n."""
    return sum(
        factorial(n) // prod(factorial(p) for p in lam.parts)
        for lam in enumerate_partitions(n)
    )


@lru_cache(maxsize=256)
def _llt(a: AreaSequence, check_symmetry: bool, workers: int) -> SymFunc:
    pairs = tuple((i - 1, j - 1) for i, j in edges_of(a).sorted())
    logger.debug("LLT oracle on %s: %d colorings", a, partition_coloring_count(a.n))
    table = _enumerate(partial(_ascent_counts, pairs), _contents(a.n, check_symmetry), workers)
    return to_monomial_basis(table, a.n)


def llt_bruteforce(
    a: AreaSequence,
    *,
    limit: Optional[int] = None,
    check_symmetry: bool = False,
    workers: Optional[int] = None,
) -> SymFunc:
    """
    LLT_a(x; q) in the monomial basis, from its coloring definition:
    the sum of q^asc(kappa) over colorings kappa, asc counting edges (i, j)
    with kappa(i) < kappa(j).
    """
    check_limit(a.n, limit)
    return _llt(a, check_symmetry, workers or settings.WORKERS)


@lru_cache(maxsize=512)
def _ribbon(alpha: Composition, check_symmetry: bool, workers: int) -> SymFunc:
    n = alpha.size
    if n == 0:
        return SymFunc.one()
    counter = partial(_ribbon_count, n, set_of(alpha))
    table = _enumerate(counter, _contents(n, check_symmetry), workers)
    return to_monomial_basis(table, n)


def ribbon_bruteforce(
    alpha: Composition,
    *,
    limit: Optional[int] = None,
    check_symmetry: bool = False,
    workers: Optional[int] = None,
) -> SymFunc:
    """r_alpha in the monomial basis: colorings rising on set(alpha), weakly falling elsewhere."""
    check_limit(alpha.size, limit)
    return _ribbon(alpha, check_symmetry, workers or settings.WORKERS)


# Kostka numbers and basis changes

def _horizontal_strips(inner: Tuple[int, ...], outer: Tuple[int, ...], size: int):
    """Shapes nu, inner <= nu <= outer, with nu/inner a horizontal strip of size cells."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))

    def extend(r: int, remaining: int, acc: Tuple[int, ...]):
        if r == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        upper = outer[r] if r == 0 else min(outer[r], inner[r - 1])
        for add in range(min(upper - inner[r], remaining) + 1):
            yield from extend(r + 1, remaining - add, acc + (inner[r] + add,))

    return extend(0, size, ())


@lru_cache(maxsize=None)
def _ssyt_count(shape: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    @lru_cache(maxsize=None)
    def fill(inner: Tuple[int, ...], index: int) -> int:
        if index == len(content):
            return 1 if inner == shape else 0
        return sum(fill(nu, index + 1) for nu in _horizontal_strips(inner, shape, content[index]))

    if sum(shape) != sum(content):
        return 0
    return fill((), 0)


def kostka_number(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    return _ssyt_count(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> KostkaMatrix:
    partitions = tuple(enumerate_partitions(n))
    entries = {
        (lam, mu): k
        for lam in partitions
        for mu in partitions
        if (k := kostka_number(lam, mu))
    }
    return KostkaMatrix(n, partitions, entries)


def _schur_row(lam: Partition) -> SymFunc:
    matrix = kostka_matrix(lam.size)
    return SymFunc(lam.size, Basis.MONOMIAL, matrix.row(lam))


def schur_in_monomials(lam: Partition, *, limit: Optional[int] = None) -> SymFunc:
    """s_lambda = sum over mu of K[lambda][mu] m_mu."""
    check_limit(lam.size, limit)
    return _schur_row(lam)


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis is Basis.MONOMIAL:
        return f
    result = SymFunc.zero(f.degree, Basis.MONOMIAL)
    for lam, c in f.items():
        result = result + _schur_row(lam).scale(c)
    return result


def monomial_to_schur(f: SymFunc) -> SymFunc:
    """
    The Schur expansion of a monomial-basis function, by back-substitution
    through the unitriangular Kostka system in reverse-lex order.
    """
    if f.basis is Basis.SCHUR:
        return f
    matrix = kostka_matrix(f.degree)
    residual: Dict[Partition, QPoly] = dict(f.coeffs)
    result: Dict[Partition, QPoly] = {}
    for lam in matrix.partitions:
        c = residual.pop(lam, QPoly.zero())
        if not c:
            continue
        result[lam] = c
        for mu, k in matrix.row(lam).items():
            if mu != lam:
                residual[mu] = residual.get(mu, QPoly.zero()) - c * k
    leftover = {mu: c for mu, c in residual.items() if c}
    if leftover:
        raise NonSymmetricError(f"monomial expansion has no Schur expansion; residual {leftover}")
    return SymFunc(f.degree, Basis.SCHUR, result)


# Ribbons via tableaux

@lru_cache(maxsize=None)
def _descent_index(n: int) -> Dict[FrozenSet[int], Dict[Partition, int]]:
    """{D: {lambda: #SYT(lambda) with descent set D}} over all lambda of n."""
    index: Dict[FrozenSet[int], Dict[Partition, int]] = {}
    for (descents, lam), count in syt_descent_counts(n).items():
        index.setdefault(descents, {})[lam] = count
    return index


def ribbon_by_tableaux(alpha: Composition) -> SymFunc:
    """r_alpha = sum over lambda of #{T in SYT(lambda) : D(T) = set(alpha)} s_lambda."""
    n = alpha.size
    return SymFunc(n, Basis.SCHUR, _descent_index(n).get(set_of(alpha), {}))


# Products

def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """
    Product of two monomial-basis functions.

    The coefficient of x^mu in f*g sums f[alpha] g[mu - alpha] over exponent
    vectors alpha <= mu of degree deg f; symmetry lets each factor be read
    at the sorted partition of its vector.
    """
    if f.basis is not Basis.MONOMIAL or g.basis is not Basis.MONOMIAL:
        raise BasisMismatchError("multiply needs monomial-basis operands; convert with schur_to_monomial")
    degree = f.degree + g.degree
    result: Dict[Partition, QPoly] = {}
    for mu in enumerate_partitions(degree):
        total = QPoly.zero()
        for alpha in product(*(range(p + 1) for p in mu.parts)):
            if sum(alpha) != f.degree:
                continue
            cf = f.coefficient(Partition.sorted_from(alpha))
            if not cf:
                continue
            cg = g.coefficient(Partition.sorted_from(m - a for m, a in zip(mu.parts, alpha)))
            if cg:
                total = total + cf * cg
        if total:
            result[mu] = total
    return SymFunc(degree, Basis.MONOMIAL, result)


def specialize_q1(f: SymFunc) -> Dict[Partition, int]:
    """Coefficients evaluated at q = 1."""
    return {lam: c.eval_at_one() for lam, c in f.items() if c.eval_at_one()}
