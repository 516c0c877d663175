"""
Pydantic schema for a validated command-line request.
"""
import enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from llt_ribbon.models.symfunc import Basis


class Verb(str, enum.Enum):
    EXPAND = "expand"
    VERIFY = "verify"
    SYT = "syt"
    ORACLE = "oracle"


class OutputFormat(str, enum.Enum):
    PLAIN = "plain"
    LATEX = "latex"
    JSON = "json"


class Command(BaseModel):
    """One CLI invocation after option parsing, before execution."""
    verb: Verb
    target: str = Field(..., min_length=1)
    basis: Basis = Basis.SCHUR
    format: OutputFormat = OutputFormat.PLAIN
    limit: Optional[int] = Field(None, ge=1)
    bruteforce: bool = False

    @model_validator(mode="after")
    def check_arity(self) -> "Command":
        """Flags only make sense for the verbs that read them."""
        if self.bruteforce and self.verb is not Verb.EXPAND:
            raise ValueError("--bruteforce only applies to expand")
        if self.verb is Verb.SYT and self.limit is not None:
            raise ValueError("syt takes no size limit")
        return self
