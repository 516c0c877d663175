"""
Exception hierarchy. Each class carries the process exit code the CLI uses.
"""
import enum
from typing import Optional


class ExitCode(enum.IntEnum):
    """Process exit codes of the command-line interface."""
    OK = 0
    COUNTEREXAMPLE = 1
    USAGE = 2
    RESOURCE_LIMIT = 3


class LLTError(Exception):
    """Base class for all library errors."""
    exit_code: ExitCode = ExitCode.USAGE


class DomainError(LLTError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class InvalidGraphError(DomainError):
    """An area sequence or edge set is not a unit interval graph."""


class LiteralSyntaxError(DomainError):
    """A textual graph, shape or list literal could not be parsed."""


class PreconditionError(DomainError):
    """A hypothesis of a recurrence or lemma does not hold."""

    def __init__(self, hypothesis: str, detail: str):
        self.hypothesis = hypothesis
        self.detail = detail
        super().__init__(f"hypothesis {hypothesis} violated: {detail}")


class BasisMismatchError(LLTError, TypeError):
    """Arithmetic between symmetric functions of different bases or degrees."""


class NonSymmetricError(LLTError, ArithmeticError):
    """A coefficient table is not invariant under permuting variables."""
    exit_code = ExitCode.COUNTEREXAMPLE


class ResourceLimitError(LLTError):
    """A brute-force enumeration exceeds the configured size limit."""
    exit_code = ExitCode.RESOURCE_LIMIT

    def __init__(self, size: int, limit: int, what: str = "vertices"):
        self.size = size
        self.limit = limit
        super().__init__(
            f"{size} {what} exceeds the brute-force limit of {limit} "
            f"(raise it with --limit/--max-vertices or LLT_MAX_VERTICES)"
        )


def check_limit(size: int, limit: Optional[int], what: str = "vertices") -> int:
    """Raise ResourceLimitError when size exceeds limit (None reads the settings)."""
    if limit is None:
        from llt_ribbon.core.config import settings
        limit = settings.MAX_VERTICES
    if size > limit:
        raise ResourceLimitError(size, limit, what)
    return limit
