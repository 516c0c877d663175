"""
Pydantic schemas for serialized polynomials and symmetric functions.
"""
import enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from llt_ribbon.models.composition import Partition
from llt_ribbon.models.qpoly import QPoly
from llt_ribbon.models.symfunc import Basis, SymFunc


QPolyPayload = Dict[str, int]

_qpoly_adapter = TypeAdapter(QPolyPayload)


def qpoly_to_payload(p: QPoly) -> QPolyPayload:
    return {str(e): c for e, c in p.terms()}


def qpoly_from_payload(payload: QPolyPayload) -> QPoly:
    return QPoly({int(e): c for e, c in payload.items()})


def qpoly_to_json(p: QPoly) -> str:
    """{"2":3,"3":2}"""
    return _qpoly_adapter.dump_json(qpoly_to_payload(p)).decode()


def qpoly_from_json(text: str) -> QPoly:
    return qpoly_from_payload(_qpoly_adapter.validate_json(text))


def partition_key(lam: Partition) -> str:
    return ",".join(map(str, lam.parts))


def parse_partition_key(key: str) -> Partition:
    return Partition(tuple(int(p) for p in key.split(",") if p.strip()))


class SymFuncPayload(BaseModel):
    """Schema for a symmetric function on the wire."""
    degree: int = Field(..., ge=0)
    basis: Basis
    coeffs: Dict[str, QPolyPayload]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "degree": 5,
                "basis": "schur",
                "coeffs": {"3,2": {"2": 3, "3": 2}},
            }
        }
    )

    @classmethod
    def from_symfunc(cls, f: SymFunc) -> "SymFuncPayload":
        return cls(
            degree=f.degree,
            basis=f.basis,
            coeffs={partition_key(lam): qpoly_to_payload(c) for lam, c in f.items()},
        )

    def to_symfunc(self) -> SymFunc:
        return SymFunc(
            self.degree,
            self.basis,
            {parse_partition_key(k): qpoly_from_payload(v) for k, v in self.coeffs.items()},
        )


class Method(str, enum.Enum):
    """How an expansion was obtained."""
    FORMULA = "formula"
    BRUTEFORCE = "bruteforce"


class ExpansionPayload(BaseModel):
    """Schema for the output of the expand command."""
    graph: str
    area: List[int]
    method: Method
    family: Dict[str, int] = Field(default_factory=dict)
    expansion: SymFuncPayload


class OracleResult(BaseModel):
    """Schema for the output of the oracle command."""
    graph: str
    area: List[int]
    colorings: int
    seconds: float
    monomial: SymFuncPayload
    schur: SymFuncPayload
