"""
Closed-form ribbon expansions of LLT polynomials and their checks.

Every expansion here has the shape

    sum over compositions alpha of N of q^{v(set(alpha))} r_alpha

for a weight list v of length N-1: the area sequence itself for paths and
melting lollipops, the modified sequence b for two-headed melting lollipops.
The check_* functions compare such formulas against the brute-force oracle
and return a VerificationReport.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from llt_ribbon.combinatorics import (
    check_weights, concat, descent_set, enumerate_compositions,
    enumerate_partitions, enumerate_syt, hook_length_count, near_concat,
    reverse, set_of, weighted_sum,
)
from llt_ribbon.core.errors import DomainError, PreconditionError, check_limit
from llt_ribbon.graphs import (
    lollipop_parameters, melting_lollipop, modified_sequence_b, path,
    transpose, two_headed, two_headed_parameters,
)
from llt_ribbon.models.composition import Composition, IntList
from llt_ribbon.models.graph import AreaSequence
from llt_ribbon.models.qpoly import ONE, Q, QPoly
from llt_ribbon.models.symfunc import Basis, SymFunc
from llt_ribbon.schemas.report import VerificationReport
from llt_ribbon.symfunc import (
    llt_bruteforce, monomial_to_schur, multiply, ribbon_bruteforce,
    ribbon_by_tableaux, schur_to_monomial,
)


logger = logging.getLogger(__name__)


# Formulas

def weighted_ribbon_sum(v: Sequence[int]) -> SymFunc:
    """sum over alpha of N = len(v)+1 of q^{v(set(alpha))} r_alpha, in the Schur basis."""
    return _weighted_ribbon_sum(check_weights(v))


@lru_cache(maxsize=4096)
def _weighted_ribbon_sum(v: IntList) -> SymFunc:
    n = len(v) + 1
    total = SymFunc.zero(n, Basis.SCHUR)
    for alpha in enumerate_compositions(n):
        weight = QPoly.monomial(weighted_sum(v, set_of(alpha)))
        total = total + ribbon_by_tableaux(alpha).scale(weight)
    return total


def formula_path(n: int) -> SymFunc:
    """LLT of the path P_n: weights (1^{n-1})."""
    return weighted_ribbon_sum(path(n).a)


def formula_melting_lollipop(m: int, n: int, k: int) -> SymFunc:
    """LLT of L_{m,n}^{(k)}: weights equal to its area sequence."""
    return weighted_ribbon_sum(melting_lollipop(m, n, k).a)


def formula_two_headed(m1: int, k1: int, n: int, m2: int, k2: int) -> SymFunc:
    """LLT of the two-headed melting lollipop: weights b, not the area sequence."""
    return weighted_ribbon_sum(modified_sequence_b(m1, k1, n, m2, k2))


def corollary_schur_expansion(m1: int, k1: int, n: int, m2: int, k2: int) -> SymFunc:
    """sum over lambda and T in SYT(lambda) of q^{b(D(T))} s_lambda."""
    b = modified_sequence_b(m1, k1, n, m2, k2)
    size = m1 + n + m2
    coeffs = {}
    for lam in enumerate_partitions(size):
        c = QPoly.zero()
        for tableau in enumerate_syt(lam):
            c = c + QPoly.monomial(weighted_sum(b, descent_set(tableau)))
        coeffs[lam] = c
    return SymFunc(size, Basis.SCHUR, coeffs)


def is_q_positive(f: SymFunc) -> bool:
    """Every coefficient is a polynomial with nonnegative integer coefficients."""
    return all(c.is_nonnegative() for _, c in f.items())


# Recurrence triples

@dataclass(frozen=True)
class RecurrenceTriple:
    """
    Area sequences a, a', a'' equal except at position i,
    where a_i = a'_i + 1 = a''_i + 2.
    """
    a: AreaSequence
    a1: AreaSequence
    a2: AreaSequence
    i: int

    @classmethod
    def from_sequences(
        cls, a: AreaSequence, a1: AreaSequence, a2: AreaSequence
    ) -> "RecurrenceTriple":
        """Infer the differing position; the sequences must differ in exactly one place."""
        if not a.n == a1.n == a2.n:
            raise PreconditionError("index", f"lengths differ: {a}, {a1}, {a2}")
        diff = sorted({
            p for p in range(1, a.n)
            if not a[p] == a1[p] == a2[p]
        })
        if len(diff) != 1:
            raise PreconditionError(
                "step", f"sequences must differ in exactly one position, found {diff or 'none'}"
            )
        return cls(a, a1, a2, diff[0])

    def validate(self, *, strict: bool = False) -> None:
        """
        Raise PreconditionError naming the first failed hypothesis.

        H2 reads a_n as 0 (the last vertex has no edge to its right);
        strict=True rejects triples that need that entry.
        """
        a, a1, a2, i, n = self.a, self.a1, self.a2, self.i, self.a.n
        if not a.n == a1.n == a2.n:
            raise PreconditionError("index", f"lengths differ: {a}, {a1}, {a2}")
        if not 1 <= i <= n - 1:
            raise PreconditionError("index", f"position {i} outside [1, {n - 1}]")
        for p in range(1, n):
            if p != i and not a[p] == a1[p] == a2[p]:
                raise PreconditionError("step", f"sequences also differ at position {p}")
        if not a[i] == a1[i] + 1 == a2[i] + 2:
            raise PreconditionError(
                "step", f"need a_i = a'_i + 1 = a''_i + 2 at i={i}, got {a[i]}, {a1[i]}, {a2[i]}"
            )
        previous = a[i - 1] if i > 1 else 0
        if not previous + 1 <= a[i]:
            raise PreconditionError("H1", f"a_{i - 1} + 1 = {previous + 1} > a_{i} = {a[i]}")
        j = i + a[i]
        if strict and j > n - 1:
            raise PreconditionError("index", f"H2 reads a_{j}, outside [1, {n - 1}]")
        if a[j - 1] != a[j] + 1:
            raise PreconditionError("H2", f"a_{j - 1} = {a[j - 1]} but a_{j} + 1 = {a[j] + 1}")

    def params(self) -> dict:
        return {"a": list(self.a.a), "a1": list(self.a1.a), "a2": list(self.a2.a), "i": self.i}


def lollipop_triple(m: int, n: int, k: int) -> RecurrenceTriple:
    """L_{m,n}^{(k)}, L_{m,n}^{(k+1)}, L_{m,n}^{(k+2)} at position n+1; needs k <= m-3."""
    if not 0 <= k <= m - 3:
        raise DomainError(f"lollipop triple needs 0 <= k <= m-3, got m={m}, k={k}")
    return RecurrenceTriple(
        melting_lollipop(m, n, k),
        melting_lollipop(m, n, k + 1),
        melting_lollipop(m, n, k + 2),
        n + 1,
    )


def two_headed_triple(m1: int, k1: int, n: int, m2: int, k2: int) -> RecurrenceTriple:
    """Two-headed lollipops with k2, k2+1, k2+2 at position m1+n+1; needs k2 <= m2-3."""
    if not 0 <= k2 <= m2 - 3:
        raise DomainError(f"two-headed triple needs 0 <= k2 <= m2-3, got m2={m2}, k2={k2}")
    return RecurrenceTriple(
        two_headed(m1, k1, n, m2, k2),
        two_headed(m1, k1, n, m2, k2 + 1),
        two_headed(m1, k1, n, m2, k2 + 2),
        m1 + n + 1,
    )


# Checks

def _oracle_schur(a: AreaSequence, limit: Optional[int], check_symmetry: bool = False) -> SymFunc:
    return monomial_to_schur(llt_bruteforce(a, limit=limit, check_symmetry=check_symmetry))


def check_lee_recurrence(
    triple: RecurrenceTriple,
    *,
    limit: Optional[int] = None,
    strict: bool = False,
) -> VerificationReport:
    """
    LLT_a + q LLT_a'' = (1+q) LLT_a' by brute force; the same relation for
    the weighted ribbon sums of a, a', a'' is reported under checks.
    """
    triple.validate(strict=strict)
    logger.debug("recurrence at i=%d: %s, %s, %s", triple.i, triple.a, triple.a1, triple.a2)
    la = llt_bruteforce(triple.a, limit=limit)
    la1 = llt_bruteforce(triple.a1, limit=limit)
    la2 = llt_bruteforce(triple.a2, limit=limit)
    lhs = monomial_to_schur(la + la2.scale(Q))
    rhs = monomial_to_schur(la1.scale(ONE + Q))

    ribbon_lhs = weighted_ribbon_sum(triple.a.a) + weighted_ribbon_sum(triple.a2.a).scale(Q)
    ribbon_rhs = weighted_ribbon_sum(triple.a1.a).scale(ONE + Q)
    return VerificationReport.compare(
        "thm-lee-recurrence", triple.params(), lhs, rhs,
        ribbon_progression=ribbon_lhs == ribbon_rhs,
    )


def check_union_lemma(
    v: Sequence[int], w: Sequence[int], *, limit: Optional[int] = None
) -> VerificationReport:
    """W(v) W(w) = W((v, 0, w)) with the product taken in the monomial basis."""
    v, w = check_weights(v), check_weights(w)
    check_limit(len(v) + len(w) + 2, limit)
    product = multiply(
        schur_to_monomial(weighted_ribbon_sum(v)),
        schur_to_monomial(weighted_ribbon_sum(w)),
    )
    return VerificationReport.compare(
        "lemma-union", {"v": list(v), "w": list(w)},
        monomial_to_schur(product), weighted_ribbon_sum(v + (0,) + w),
    )


def progression_position(v: IntList, v1: IntList, v2: IntList) -> int:
    """The position i with v_i = v'_i + 1 = v''_i + 2, all other entries equal."""
    if not len(v) == len(v1) == len(v2):
        raise PreconditionError("index", f"lengths differ: {v}, {v1}, {v2}")
    diff = [p for p in range(1, len(v) + 1) if not v[p - 1] == v1[p - 1] == v2[p - 1]]
    if len(diff) != 1:
        raise PreconditionError(
            "step", f"lists must differ in exactly one position, found {diff or 'none'}"
        )
    i = diff[0]
    if not v[i - 1] == v1[i - 1] + 1 == v2[i - 1] + 2:
        raise PreconditionError(
            "step", f"need v_i = v'_i + 1 = v''_i + 2 at i={i}, got {v[i - 1]}, {v1[i - 1]}, {v2[i - 1]}"
        )
    return i


def check_progression_lemma(
    v: Sequence[int], v1: Sequence[int], v2: Sequence[int]
) -> VerificationReport:
    """W(v) + q W(v'') = (1+q) W(v') for lists differing by 1 and 2 in one position."""
    v, v1, v2 = check_weights(v), check_weights(v1), check_weights(v2)
    i = progression_position(v, v1, v2)
    lhs = weighted_ribbon_sum(v) + weighted_ribbon_sum(v2).scale(Q)
    rhs = weighted_ribbon_sum(v1).scale(ONE + Q)
    return VerificationReport.compare(
        "lemma-progression", {"v": list(v), "v1": list(v1), "v2": list(v2), "i": i}, lhs, rhs,
    )


def check_path_lemma(n: int, *, limit: Optional[int] = None) -> VerificationReport:
    return VerificationReport.compare(
        "lemma-path", {"n": n}, _oracle_schur(path(n), limit), formula_path(n),
    )


def check_melting_lollipop(
    m: int, n: int, k: int, *, limit: Optional[int] = None
) -> VerificationReport:
    formula = formula_melting_lollipop(m, n, k)
    return VerificationReport.compare(
        "thm-melting-lollipop", {"m": m, "n": n, "k": k},
        _oracle_schur(melting_lollipop(m, n, k), limit), formula,
        positive=is_q_positive(formula),
    )


def check_two_headed(
    m1: int, k1: int, n: int, m2: int, k2: int, *, limit: Optional[int] = None
) -> VerificationReport:
    formula = formula_two_headed(m1, k1, n, m2, k2)
    return VerificationReport.compare(
        "thm-two-headed", {"m1": m1, "k1": k1, "n": n, "m2": m2, "k2": k2},
        _oracle_schur(two_headed(m1, k1, n, m2, k2), limit), formula,
        positive=is_q_positive(formula),
    )


def check_corollary(
    m1: int, k1: int, n: int, m2: int, k2: int, *, limit: Optional[int] = None
) -> VerificationReport:
    """Tableau sum = ribbon formula, and both equal the oracle."""
    formula = formula_two_headed(m1, k1, n, m2, k2)
    oracle = _oracle_schur(two_headed(m1, k1, n, m2, k2), limit)
    return VerificationReport.compare(
        "cor-two-headed", {"m1": m1, "k1": k1, "n": n, "m2": m2, "k2": k2},
        corollary_schur_expansion(m1, k1, n, m2, k2), formula,
        oracle=oracle == formula,
    )


def check_ribbon_product(
    alpha: Composition, beta: Composition, *, limit: Optional[int] = None
) -> VerificationReport:
    """r_alpha r_beta = r_{alpha.beta} + r_{alpha(.)beta} on brute-force expansions."""
    check_limit(alpha.size + beta.size, limit)
    lhs = multiply(ribbon_bruteforce(alpha, limit=limit), ribbon_bruteforce(beta, limit=limit))
    rhs = ribbon_bruteforce(concat(alpha, beta), limit=limit) + ribbon_bruteforce(
        near_concat(alpha, beta), limit=limit
    )
    return VerificationReport.compare(
        "prop-ribbon-product", {"alpha": list(alpha.parts), "beta": list(beta.parts)},
        monomial_to_schur(lhs), monomial_to_schur(rhs),
    )


def check_ribbon_reversal(
    alpha: Composition, *, limit: Optional[int] = None
) -> VerificationReport:
    """r_alpha = r_{alpha^r}; the tableau expansion must also match the oracle."""
    lhs = ribbon_by_tableaux(alpha)
    rhs = ribbon_by_tableaux(reverse(alpha))
    oracle = monomial_to_schur(ribbon_bruteforce(alpha, limit=limit))
    return VerificationReport.compare(
        "prop-ribbon-reversal", {"alpha": list(alpha.parts)}, lhs, rhs,
        oracle=oracle == lhs,
    )


def check_transpose_invariance(
    a: AreaSequence, *, limit: Optional[int] = None
) -> VerificationReport:
    """LLT_a = LLT_{a^T}; both oracle runs also enumerate permuted contents."""
    return VerificationReport.compare(
        "prop-transpose-invariance", {"a": list(a.a)},
        _oracle_schur(a, limit, check_symmetry=True),
        _oracle_schur(transpose(a), limit, check_symmetry=True),
    )


def check_q1_specialization(
    a: AreaSequence, *, limit: Optional[int] = None
) -> VerificationReport:
    """At q = 1 the Schur coefficient of s_lambda is f^lambda."""
    oracle = _oracle_schur(a, limit, check_symmetry=True)
    at_one = oracle.map_coefficients(lambda c: QPoly.constant(c.eval_at_one()))
    expected = SymFunc(
        a.n, Basis.SCHUR, {lam: hook_length_count(lam) for lam in enumerate_partitions(a.n)}
    )
    return VerificationReport.compare("prop-q1-specialization", {"a": list(a.a)}, at_one, expected)


def recurrence_triples(max_vertices: int) -> Iterable[Tuple[str, RecurrenceTriple]]:
    """Recurrence triples of both families with at most max_vertices vertices."""
    for m, n, k in lollipop_parameters(max_vertices):
        if k <= m - 3:
            yield f"lollipop:{m},{n},{k}", lollipop_triple(m, n, k)
    for m1, k1, n, m2, k2 in two_headed_parameters(max_vertices):
        if m1 >= 2 and k2 <= m2 - 3:
            yield f"twoheaded:{m1},{k1},{n},{m2},{k2}", two_headed_triple(m1, k1, n, m2, k2)
