"""
Pydantic schema for verification reports.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from llt_ribbon.models.symfunc import SymFunc
from llt_ribbon.schemas.symfunc import SymFuncPayload


class VerificationReport(BaseModel):
    """One checked instance of a claim."""
    claim: str
    params: Dict[str, Any] = Field(default_factory=dict)
    holds: bool
    lhs: Optional[SymFuncPayload] = None
    rhs: Optional[SymFuncPayload] = None
    checks: Dict[str, bool] = Field(default_factory=dict)
    error: Optional[str] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "claim": "thm-two-headed",
                "params": {"m1": 3, "k1": 0, "n": -1, "m2": 3, "k2": 0},
                "holds": True,
            }
        }
    )

    @classmethod
    def compare(
        cls,
        claim: str,
        params: Dict[str, Any],
        lhs: SymFunc,
        rhs: SymFunc,
        **checks: bool,
    ) -> "VerificationReport":
        """Report whether lhs == rhs exactly, with any side checks folded into holds."""
        holds = lhs == rhs and all(checks.values())
        return cls(
            claim=claim,
            params=params,
            holds=holds,
            lhs=SymFuncPayload.from_symfunc(lhs),
            rhs=SymFuncPayload.from_symfunc(rhs),
            checks={"equal": lhs == rhs, **checks},
        )

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)


class GridSummary(BaseModel):
    """Totals for one run of a claim grid."""
    claim: str
    instances: int = 0
    failures: int = 0
    failed: List[Dict[str, Any]] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def add(self, report: VerificationReport) -> None:
        self.instances += 1
        if not report.holds:
            self.failures += 1
            self.failed.append(report.params)
