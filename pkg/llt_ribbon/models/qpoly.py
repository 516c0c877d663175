"""
Sparse univariate polynomials in q over the integers.
"""
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from llt_ribbon.core.errors import DomainError


Scalar = int


class QPoly:
    """
    An element of Z[q] stored as {degree: coefficient} without zero entries.

    Instances are immutable and hashable; the zero polynomial is the empty map.
    """
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        clean: Dict[int, int] = {}
        for e, c in (coeffs or {}).items():
            e, c = int(e), int(c)
            if e < 0:
                raise DomainError(f"negative exponent {e} in a polynomial in q")
            if c:
                clean[e] = c
        self._coeffs = dict(sorted(clean.items()))
        self._hash: Optional[int] = None

    # Constructors

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "QPoly":
        """c * q^e."""
        if e < 0:
            raise DomainError(f"negative exponent {e} in a polynomial in q")
        return cls({e: c})

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls({0: c})

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    # Access

    def terms(self) -> Iterator[Tuple[int, int]]:
        """(degree, coefficient) pairs in ascending degree."""
        return iter(self._coeffs.items())

    def coefficient(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def eval_at_one(self) -> int:
        """Sum of coefficients."""
        return sum(self._coeffs.values())

    def evaluate(self, x: int) -> int:
        return sum(c * x ** e for e, c in self._coeffs.items())

    # Ring operations

    def __add__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coeffs)
        for e, c in other._coeffs.items():
            result[e] = result.get(e, 0) + c
        return QPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QPoly":
        return (-self) + other

    def __mul__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        result: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return QPoly(result)

    __rmul__ = __mul__

    def scale(self, c: int) -> "QPoly":
        """Scalar multiple c * p."""
        return QPoly({e: c * v for e, v in self._coeffs.items()})

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # Rendering

    def to_plain(self) -> str:
        """3*q^2 + 2*q^3"""
        if not self._coeffs:
            return "0"
        out = []
        for index, (e, c) in enumerate(self._coeffs.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if index == 0:
                out.append(f"-{body}" if sign == "-" else body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_latex(self) -> str:
        """3q^{2}+2q^{3}"""
        if not self._coeffs:
            return "0"
        out = []
        for index, (e, c) in enumerate(self._coeffs.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{{{e}}}"
                body = power if mag == 1 else f"{mag}{power}"
            if c < 0:
                out.append(f"-{body}")
            else:
                out.append(body if index == 0 else f"+{body}")
        return "".join(out)

    def is_single_term(self) -> bool:
        return len(self._coeffs) == 1

    def __str__(self) -> str:
        return self.to_plain()

    def __repr__(self) -> str:
        return f"QPoly({self._coeffs!r})"


def _coerce(value: Union[QPoly, Scalar]):
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly.constant(value)
    return NotImplemented


def monomial(e: int) -> QPoly:
    """q^e."""
    return QPoly.monomial(e)


Q = QPoly.monomial(1)
ONE = QPoly.one()
