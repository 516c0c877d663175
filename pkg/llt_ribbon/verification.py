"""
Claim registry and exhaustive grid runner.

Each claim maps to a check in llt_ribbon.theorems and a deterministic
parameter grid; run_claim yields one VerificationReport per grid point in
grid order, whether it runs sequentially or across worker processes.
"""
import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import product
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from llt_ribbon import theorems
from llt_ribbon.combinatorics import enumerate_compositions
from llt_ribbon.core.config import settings
from llt_ribbon.core.errors import NonSymmetricError
from llt_ribbon.graphs import (
    area_sequences_upto, lollipop_parameters, two_headed_parameters,
)
from llt_ribbon.schemas.report import GridSummary, VerificationReport


logger = logging.getLogger(__name__)


class Claim(str, enum.Enum):
    """Claims the verify command can check."""
    PATH_LEMMA = "path-lemma"
    UNION_LEMMA = "union-lemma"
    PROGRESSION_LEMMA = "progression-lemma"
    LEE_RECURRENCE = "lee-recurrence"
    MELTING_LOLLIPOP = "melting-lollipop"
    TWO_HEADED = "two-headed"
    COROLLARY = "corollary"
    RIBBON_PRODUCT = "ribbon-product"
    RIBBON_REVERSAL = "ribbon-reversal"
    TRANSPOSE_INVARIANCE = "transpose-invariance"
    Q1_SPECIALIZATION = "q1-specialization"

    @property
    def label(self) -> str:
        """The claim field of the reports this claim produces."""
        return _LABELS[self]


_LABELS: Dict[Claim, str] = {
    Claim.PATH_LEMMA: "lemma-path",
    Claim.UNION_LEMMA: "lemma-union",
    Claim.PROGRESSION_LEMMA: "lemma-progression",
    Claim.LEE_RECURRENCE: "thm-lee-recurrence",
    Claim.MELTING_LOLLIPOP: "thm-melting-lollipop",
    Claim.TWO_HEADED: "thm-two-headed",
    Claim.COROLLARY: "cor-two-headed",
    Claim.RIBBON_PRODUCT: "prop-ribbon-product",
    Claim.RIBBON_REVERSAL: "prop-ribbon-reversal",
    Claim.TRANSPOSE_INVARIANCE: "prop-transpose-invariance",
    Claim.Q1_SPECIALIZATION: "prop-q1-specialization",
}

_CHECKS: Dict[Claim, Callable[..., VerificationReport]] = {
    Claim.PATH_LEMMA: theorems.check_path_lemma,
    Claim.UNION_LEMMA: theorems.check_union_lemma,
    Claim.PROGRESSION_LEMMA: theorems.check_progression_lemma,
    Claim.LEE_RECURRENCE: theorems.check_lee_recurrence,
    Claim.MELTING_LOLLIPOP: theorems.check_melting_lollipop,
    Claim.TWO_HEADED: theorems.check_two_headed,
    Claim.COROLLARY: theorems.check_corollary,
    Claim.RIBBON_PRODUCT: theorems.check_ribbon_product,
    Claim.RIBBON_REVERSAL: theorems.check_ribbon_reversal,
    Claim.TRANSPOSE_INVARIANCE: theorems.check_transpose_invariance,
    Claim.Q1_SPECIALIZATION: theorems.check_q1_specialization,
}

# Checks that take no brute-force limit
_NO_LIMIT = {Claim.PROGRESSION_LEMMA}


def _weight_lists(length: int, max_weight: int) -> Iterator[Tuple[int, ...]]:
    return product(range(max_weight + 1), repeat=length)


def _union_grid(max_vertices: int, max_weight: int) -> Iterator[tuple]:
    top = min(max_weight, 2)
    for total in range(max_vertices - 1):
        for left in range(total + 1):
            for v in _weight_lists(left, top):
                for w in _weight_lists(total - left, top):
                    yield (v, w)


def _progression_grid(max_vertices: int, max_weight: int) -> Iterator[tuple]:
    for length in range(1, max_vertices):
        for v in _weight_lists(length, max_weight):
            for i, vi in enumerate(v):
                if vi >= 2:
                    v1 = v[:i] + (vi - 1,) + v[i + 1:]
                    v2 = v[:i] + (vi - 2,) + v[i + 1:]
                    yield (v, v1, v2)


def _ribbon_product_grid(max_vertices: int) -> Iterator[tuple]:
    for total in range(2, max_vertices + 1):
        for left in range(1, total):
            for alpha in enumerate_compositions(left):
                for beta in enumerate_compositions(total - left):
                    yield (alpha, beta)


def claim_grid(
    claim: Claim, max_vertices: int, max_weight: Optional[int] = None
) -> List[tuple]:
    """Argument tuples for every instance of claim, in deterministic order."""
    claim = Claim(claim)
    max_weight = settings.GRID_MAX_WEIGHT if max_weight is None else max_weight
    n = max_vertices
    if claim is Claim.PATH_LEMMA:
        return [(k,) for k in range(1, n + 1)]
    if claim is Claim.UNION_LEMMA:
        return list(_union_grid(n, max_weight))
    if claim is Claim.PROGRESSION_LEMMA:
        return list(_progression_grid(n, max_weight))
    if claim is Claim.LEE_RECURRENCE:
        return [(triple,) for _, triple in theorems.recurrence_triples(n)]
    if claim is Claim.MELTING_LOLLIPOP:
        return [tuple(p) for p in lollipop_parameters(n)]
    if claim in (Claim.TWO_HEADED, Claim.COROLLARY):
        return [tuple(p) for p in two_headed_parameters(n)]
    if claim is Claim.RIBBON_PRODUCT:
        return list(_ribbon_product_grid(n))
    if claim is Claim.RIBBON_REVERSAL:
        return [(alpha,) for k in range(1, n + 1) for alpha in enumerate_compositions(k)]
    return [(a,) for a in area_sequences_upto(n)]


def _params(args: tuple) -> Dict[str, Any]:
    def plain(x: Any) -> Any:
        if isinstance(x, theorems.RecurrenceTriple):
            return x.params()
        return x if isinstance(x, (int, tuple)) else str(x)

    return {"args": [plain(x) for x in args]}


def run_instance(claim: Claim, limit: int, args: tuple) -> VerificationReport:
    """Check one grid point; a non-symmetric table becomes a failed report."""
    check = _CHECKS[claim]
    try:
        if claim in _NO_LIMIT:
            report = check(*args)
        else:
            report = check(*args, limit=limit)
    except NonSymmetricError as exc:
        logger.warning("%s %s: %s", claim.value, args, exc)
        return VerificationReport(claim=claim.label, params=_params(args), holds=False, error=str(exc))
    logger.debug("%s %s: %s", claim.value, report.params, "holds" if report.holds else "fails")
    if not report.holds:
        logger.warning("counterexample to %s at %s", claim.value, report.params)
    return report


def _single_worker() -> None:
    # Nested pools are not allowed inside grid workers
    settings.WORKERS = 1


def run_claim(
    claim: Claim,
    max_vertices: Optional[int] = None,
    workers: Optional[int] = None,
    max_weight: Optional[int] = None,
) -> Iterator[VerificationReport]:
    """Yield a report for every instance of claim's grid, in grid order."""
    claim = Claim(claim)
    max_vertices = max_vertices or settings.MAX_VERTICES
    workers = workers or settings.WORKERS
    grid = claim_grid(claim, max_vertices, max_weight)
    logger.info("%s: %d instances up to %d vertices", claim.value, len(grid), max_vertices)

    run = partial(run_instance, claim, max_vertices)
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_single_worker) as pool:
            yield from pool.map(run, grid)
    else:
        for args in grid:
            yield run(args)


def summarize(claim: Claim, reports: Iterable[VerificationReport]) -> GridSummary:
    summary = GridSummary(claim=Claim(claim).value)
    for report in reports:
        summary.add(report)
    logger.info("%s: %d/%d hold", summary.claim, summary.instances - summary.failures, summary.instances)
    return summary
