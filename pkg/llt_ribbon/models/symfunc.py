"""
Degree-graded symmetric functions with coefficients in Z[q].
"""
import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from llt_ribbon.core.errors import BasisMismatchError, DomainError
from llt_ribbon.models.composition import Partition
from llt_ribbon.models.qpoly import QPoly


class Basis(str, enum.Enum):
    """Bases a SymFunc can be expanded in."""
    MONOMIAL = "monomial"
    SCHUR = "schur"

    @property
    def symbol(self) -> str:
        return "m" if self is Basis.MONOMIAL else "s"


def _reverse_lex_key(lam: Partition) -> Tuple[int, ...]:
    return tuple(-p for p in lam.parts)


class SymFunc:
    """
    A symmetric function of fixed degree, as {partition: QPoly} in one basis.

    Equality compares degree, basis and coefficients; comparing across bases
    needs an explicit conversion first.
    """
    __slots__ = ("degree", "basis", "_coeffs")

    def __init__(
        self,
        degree: int,
        basis: Basis,
        coeffs: Optional[Mapping[Partition, Union[QPoly, int]]] = None,
    ):
        if degree < 0:
            raise DomainError(f"degree must be nonnegative, got {degree}")
        clean: Dict[Partition, QPoly] = {}
        for lam, c in (coeffs or {}).items():
            if not isinstance(lam, Partition):
                lam = Partition(tuple(lam))
            if lam.size != degree:
                raise DomainError(f"partition {lam} does not have size {degree}")
            if isinstance(c, int):
                c = QPoly.constant(c)
            if c:
                clean[lam] = c
        self.degree = degree
        self.basis = Basis(basis)
        self._coeffs = MappingProxyType(
            dict(sorted(clean.items(), key=lambda item: _reverse_lex_key(item[0])))
        )

    # Constructors

    @classmethod
    def zero(cls, degree: int, basis: Basis) -> "SymFunc":
        return cls(degree, basis)

    @classmethod
    def one(cls, basis: Basis = Basis.MONOMIAL) -> "SymFunc":
        """The constant 1 (degree 0)."""
        return cls(0, basis, {Partition(()): QPoly.one()})

    @classmethod
    def basis_element(cls, lam: Partition, basis: Basis) -> "SymFunc":
        """m_lambda or s_lambda."""
        return cls(lam.size, basis, {lam: QPoly.one()})

    # Access

    @property
    def coeffs(self) -> Mapping[Partition, QPoly]:
        return self._coeffs

    def coefficient(self, lam: Union[Partition, Tuple[int, ...]]) -> QPoly:
        if not isinstance(lam, Partition):
            lam = Partition(tuple(lam))
        return self._coeffs.get(lam, QPoly.zero())

    def items(self) -> Iterator[Tuple[Partition, QPoly]]:
        """Terms in reverse-lexicographic order of partitions."""
        return iter(self._coeffs.items())

    def support(self) -> List[Partition]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def map_coefficients(self, fn: Callable[[QPoly], QPoly]) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {lam: fn(c) for lam, c in self._coeffs.items()})

    # Linear structure

    def _check_compatible(self, other: "SymFunc") -> None:
        if self.basis is not other.basis:
            raise BasisMismatchError(
                f"cannot combine {self.basis.value} and {other.basis.value} expansions; convert first"
            )
        if self.degree != other.degree:
            raise BasisMismatchError(f"cannot add degrees {self.degree} and {other.degree}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        self._check_compatible(other)
        result = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            result[lam] = result.get(lam, QPoly.zero()) + c
        return SymFunc(self.degree, self.basis, result)

    def __neg__(self) -> "SymFunc":
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Union[QPoly, int]) -> "SymFunc":
        """factor * f for a polynomial or integer factor."""
        return self.map_coefficients(lambda c: c * factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.basis is other.basis
            and dict(self._coeffs) == dict(other._coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.basis, tuple(self._coeffs.items())))

    def __repr__(self) -> str:
        terms = ", ".join(f"{lam}: {c}" for lam, c in self._coeffs.items())
        return f"SymFunc(degree={self.degree}, basis={self.basis.value}, {{{terms}}})"


@dataclass(frozen=True)
class KostkaMatrix:
    """K[lambda][mu]: SSYT of shape lambda and content mu, for all partitions of n."""
    degree: int
    partitions: Tuple[Partition, ...]
    entries: Mapping[Tuple[Partition, Partition], int]

    def __getitem__(self, key: Tuple[Partition, Partition]) -> int:
        return self.entries.get(key, 0)

    def row(self, lam: Partition) -> Dict[Partition, int]:
        return {mu: self[lam, mu] for mu in self.partitions if self[lam, mu]}

    def is_unitriangular(self) -> bool:
        """Unit diagonal and zero above it in reverse-lex order."""
        for i, lam in enumerate(self.partitions):
            if self[lam, lam] != 1:
                return False
            if any(self[lam, mu] for mu in self.partitions[:i]):
                return False
        return True
