"""
Tests for the closed-form expansions and the recurrence checks.
"""
import pytest

import llt_ribbon.theorems as theorems
from llt_ribbon.core.errors import DomainError, PreconditionError, ResourceLimitError
from llt_ribbon.graphs import (
    lollipop_parameters, melting_lollipop, path, two_headed, two_headed_parameters,
)
from llt_ribbon.models.composition import Composition, Partition
from llt_ribbon.models.graph import AreaSequence
from llt_ribbon.models.qpoly import QPoly, Q
from llt_ribbon.models.symfunc import Basis, SymFunc
from llt_ribbon.combinatorics import enumerate_partitions, hook_length_count
from llt_ribbon.symfunc import llt_bruteforce, monomial_to_schur, specialize_q1
from llt_ribbon.theorems import (
    RecurrenceTriple, check_corollary, check_lee_recurrence, check_melting_lollipop,
    check_path_lemma, check_progression_lemma, check_q1_specialization,
    check_ribbon_product, check_ribbon_reversal, check_transpose_invariance,
    check_two_headed, check_union_lemma, corollary_schur_expansion, formula_melting_lollipop,
    formula_path, formula_two_headed, is_q_positive, lollipop_triple,
    recurrence_triples, two_headed_triple, weighted_ribbon_sum,
)


A = AreaSequence.of
P = Partition.of
C = Composition.of


def oracle(a):
    return monomial_to_schur(llt_bruteforce(a))


def test_weighted_ribbon_sum_small_cases():
    """W() = s_1 and W(1) = s_2 + q s_11."""
    assert weighted_ribbon_sum(()) == SymFunc.basis_element(P(1), Basis.SCHUR)
    assert weighted_ribbon_sum((1,)) == SymFunc(2, Basis.SCHUR, {P(2): 1, P(1, 1): Q})


def test_worked_example_three_ways(example_two_headed):
    """s_32 coefficient 3q^2 + 2q^3 from the oracle, the ribbon formula and the tableau sum."""
    expected = QPoly({2: 3, 3: 2})
    assert weighted_ribbon_sum((1, 2, 2, 1)).coefficient(P(3, 2)) == expected
    assert formula_two_headed(3, 0, -1, 3, 0).coefficient(P(3, 2)) == expected
    assert corollary_schur_expansion(3, 0, -1, 3, 0).coefficient(P(3, 2)) == expected
    assert oracle(example_two_headed).coefficient(P(3, 2)) == expected
    assert oracle(example_two_headed) == formula_two_headed(3, 0, -1, 3, 0)


def test_formula_path():
    """The path formula matches the oracle."""
    assert formula_path(1) == SymFunc.basis_element(P(1), Basis.SCHUR)
    assert formula_path(2) == SymFunc(2, Basis.SCHUR, {P(2): 1, P(1, 1): Q})
    assert formula_path(4) == oracle(path(4))


def test_formula_melting_lollipop():
    """The melting lollipop formula matches the oracle."""
    assert formula_melting_lollipop(1, 0, 0) == SymFunc.basis_element(P(1), Basis.SCHUR)
    assert formula_melting_lollipop(3, 0, 0) == weighted_ribbon_sum((2, 1))
    assert formula_melting_lollipop(3, 0, 0) == oracle(melting_lollipop(3, 0, 0))
    assert formula_melting_lollipop(3, 1, 1) == oracle(melting_lollipop(3, 1, 1))


def test_one_headed_case_recovers_lollipops():
    """m1 = 1 gives the melting lollipop formula with n+1."""
    for n in range(-1, 3):
        for m2 in range(1, 4):
            for k2 in range(m2):
                assert formula_two_headed(1, 0, n, m2, k2) == formula_melting_lollipop(m2, n + 1, k2)


def test_formula_beyond_the_oracle_limit():
    """L_{6,5} has 11 vertices: the formula still runs and gives f^lambda at q = 1."""
    a = melting_lollipop(6, 5, 0)
    with pytest.raises(ResourceLimitError):
        llt_bruteforce(a)
    f = formula_melting_lollipop(6, 5, 0)
    assert f.degree == a.n == 11
    assert specialize_q1(f) == {lam: hook_length_count(lam) for lam in enumerate_partitions(11)}


def test_formula_two_headed_small():
    """The two-headed formula matches the oracle on two edges."""
    assert formula_two_headed(2, 0, 0, 2, 0) == oracle(two_headed(2, 0, 0, 2, 0))


def test_is_q_positive():
    """q-positivity detects a negative coefficient."""
    assert is_q_positive(formula_two_headed(3, 0, -1, 3, 0))
    assert not is_q_positive(SymFunc(2, Basis.SCHUR, {P(2): 1, P(1, 1): -1}))


def test_recurrence_triple_hypotheses():
    """A lollipop triple satisfies H1 and H2 with a_n read as 0."""
    triple = lollipop_triple(3, 1, 0)
    assert triple.a == A((1, 2, 1))
    assert triple.a1 == A((1, 1, 1))
    assert triple.a2 == A((1, 0, 1))
    assert triple.i == 2
    triple.validate()
    with pytest.raises(PreconditionError) as exc:
        triple.validate(strict=True)
    assert exc.value.hypothesis == "index"


def test_recurrence_triple_from_sequences():
    """The differing position is inferred or a step violation is named."""
    triple = RecurrenceTriple.from_sequences(A((1, 2, 1)), A((1, 1, 1)), A((1, 0, 1)))
    assert triple.i == 2
    with pytest.raises(PreconditionError) as exc:
        RecurrenceTriple.from_sequences(A((2, 1, 2, 1)), A((2, 1, 2, 1)), A((2, 1, 2, 1)))
    assert exc.value.hypothesis == "step"


def test_h2_violation_is_named():
    """A triple breaking H2 is rejected with that name."""
    triple = RecurrenceTriple.from_sequences(A((2, 2, 2, 1)), A((1, 2, 2, 1)), A((0, 2, 2, 1)))
    with pytest.raises(PreconditionError) as exc:
        check_lee_recurrence(triple)
    assert exc.value.hypothesis == "H2"
    assert "H2" in str(exc.value)


def test_step_violation_is_named():
    """Entries must drop by exactly one and two."""
    triple = RecurrenceTriple(A((1, 2, 1)), A((1, 2, 1)), A((1, 0, 1)), 2)
    with pytest.raises(PreconditionError) as exc:
        triple.validate()
    assert exc.value.hypothesis == "step"


def test_index_violation_is_named():
    """The position must lie in [1, n-1]."""
    triple = RecurrenceTriple(A((1, 2, 1)), A((1, 1, 1)), A((1, 0, 1)), 4)
    with pytest.raises(PreconditionError) as exc:
        triple.validate()
    assert exc.value.hypothesis == "index"


def test_triple_constructors_check_ranges():
    """Triple builders need k <= m-3."""
    with pytest.raises(DomainError):
        lollipop_triple(3, 1, 1)
    with pytest.raises(DomainError):
        two_headed_triple(3, 0, 0, 2, 0)


def test_lee_recurrence_on_lollipop_triple():
    """The recurrence holds on a lollipop triple, ribbon side included."""
    report = check_lee_recurrence(lollipop_triple(4, 1, 0))
    assert report.holds
    assert report.claim == "thm-lee-recurrence"
    assert report.checks["ribbon_progression"]


def test_lee_recurrence_on_two_headed_triple():
    """The recurrence holds on a two-headed triple."""
    report = check_lee_recurrence(two_headed_triple(2, 0, 0, 3, 0))
    assert report.holds


@pytest.mark.parametrize("v,w", [((), ()), ((1,), (1,)), ((1, 1), (1,)), ((2,), (0, 1))])
def test_union_lemma(v, w):
    """W(v) W(w) = W(v, 0, w)."""
    assert check_union_lemma(v, w).holds


def test_progression_lemma():
    """The progression relation holds; non-progressions are rejected."""
    assert check_progression_lemma((1, 3, 1), (1, 2, 1), (1, 1, 1)).holds
    with pytest.raises(PreconditionError):
        check_progression_lemma((1, 3, 1), (1, 2, 0), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_path_lemma(n):
    """The path lemma holds for small n."""
    assert check_path_lemma(n).holds


def test_theorem_checks_report_both_sides():
    """Reports carry both sides, the params and the side checks."""
    report = check_melting_lollipop(5, 1, 2)
    assert report.holds
    assert report.checks == {"equal": True, "positive": True}
    assert report.lhs == report.rhs
    assert report.params == {"m": 5, "n": 1, "k": 2}


def test_two_headed_and_corollary_checks():
    """Two-headed formula and tableau sum both hold."""
    assert check_two_headed(3, 0, -1, 3, 0).holds
    report = check_corollary(2, 1, 1, 3, 1)
    assert report.holds
    assert report.checks["oracle"]


def test_ribbon_identities():
    """Ribbon product and reversal identities."""
    assert check_ribbon_product(C(2, 1), C(1, 2)).holds
    assert check_ribbon_product(C(1), C(1)).holds
    assert check_ribbon_reversal(C(3, 1, 2)).holds


def test_structural_properties(example_graph):
    """Transpose invariance and the q = 1 specialization."""
    assert check_transpose_invariance(example_graph).holds
    assert check_q1_specialization(example_graph).holds


def test_recurrence_triples_are_valid():
    """Every generated triple passes validation."""
    triples = list(recurrence_triples(6))
    assert triples
    for _, triple in triples:
        triple.validate()


@pytest.mark.slow
def test_melting_lollipop_exhaustive():
    """Every (m, n, k) with n + m <= 7."""
    for m, n, k in lollipop_parameters(7):
        report = check_melting_lollipop(m, n, k)
        assert report.holds, report.params


@pytest.mark.slow
def test_two_headed_exhaustive():
    """Every (m1, k1, n, m2, k2) with m1 + n + m2 <= 7: oracle = formula = tableau sum."""
    for params in two_headed_parameters(7):
        report = check_corollary(*params)
        assert report.holds, report.params
        assert is_q_positive(formula_two_headed(*params))


@pytest.mark.slow
def test_lee_recurrence_exhaustive():
    """Every recurrence triple with at most 7 vertices."""
    for label, triple in recurrence_triples(7):
        assert check_lee_recurrence(triple).holds, label


def test_structural_checks_enumerate_permuted_contents(example_graph, monkeypatch):
    """Transpose and q = 1 checks run the oracle with check_symmetry on."""
    seen = []

    def recording(a, **kwargs):
        seen.append(kwargs["check_symmetry"])
        return llt_bruteforce(a, **kwargs)

    monkeypatch.setattr(theorems, "llt_bruteforce", recording)
    assert check_transpose_invariance(example_graph).holds
    assert check_q1_specialization(example_graph).holds
    assert seen == [True, True, True]
