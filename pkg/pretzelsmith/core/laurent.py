"""
Exact Laurent polynomial arithmetic in a single variable.

The bracket variable is ``A``; Jones polynomials use ``t`` after the
substitution A = t^(-1/4). Coefficients are held as a dense ``int64`` array
ordered by exponent, starting at ``min_deg``. Every operation that could
leave the int64 range is guarded and raises instead of wrapping.
"""

import logging
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import numpy as np

from pretzelsmith.core.validator import PretzelSmithError

logger = logging.getLogger(__name__)

INT64_LIMIT = 2**63 - 1

BRACKET_VARIABLE = "A"
JONES_VARIABLE = "t"


class SpanUndefinedError(PretzelSmithError):
    """Raised when the span of the zero polynomial is requested."""


class NotDivisibleError(PretzelSmithError):
    """Raised when an exact division leaves a remainder."""


class NonIntegralDegreeError(PretzelSmithError):
    """Raised when an A-exponent does not map to an integral t-exponent."""


class CoefficientOverflowError(PretzelSmithError):
    """Raised when a coefficient would leave the exact int64 range."""


def _magnitude(coeffs: np.ndarray) -> int:
    """Largest absolute coefficient as a Python int (0 for empty arrays)."""
    if coeffs.size == 0:
        return 0
    return max(int(coeffs.max()), -int(coeffs.min()))


class LaurentPoly:
    """
    Immutable integer-coefficient Laurent polynomial.

    Attributes:
        min_deg: Exponent of the first stored coefficient (0 for the zero
            polynomial)
        coeffs: Read-only int64 array of coefficients, lowest exponent first,
            with no leading or trailing zeros
        variable: Name of the variable, ``"A"`` or ``"t"``

    Example:
        >>> d = LaurentPoly([-1, 0, 0, 0, -1], min_deg=-2)
        >>> str(d)
        '-A^-2 - A^2'
        >>> str(d * d)
        'A^-4 + 2 + A^4'
    """

    __slots__ = ("_coeffs", "_min_deg", "_variable")

    def __init__(
        self,
        coeffs: Union[Sequence[int], np.ndarray] = (),
        min_deg: int = 0,
        variable: str = BRACKET_VARIABLE,
    ):
        """
        Build a polynomial from dense coefficients.

        Args:
            coeffs: Coefficients for exponents min_deg, min_deg+1, ...
            min_deg: Exponent of coeffs[0]
            variable: Variable name used for printing and compatibility checks

        Raises:
            CoefficientOverflowError: If a coefficient does not fit in int64
            ValueError: If the coefficients are not integers
        """
        if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
            array = coeffs.copy()
        else:
            values = list(coeffs)
            for value in values:
                if int(value) != value:
                    raise ValueError(f"Coefficients must be integers, got {value!r}")
            if any(abs(int(value)) > INT64_LIMIT for value in values):
                raise CoefficientOverflowError(
                    "coefficient overflow: value exceeds the int64 range"
                )
            array = np.array([int(value) for value in values], dtype=np.int64)

        nonzero = np.flatnonzero(array)
        if nonzero.size == 0:
            array = np.zeros(0, dtype=np.int64)
            min_deg = 0
        else:
            first, last = int(nonzero[0]), int(nonzero[-1])
            array = array[first : last + 1].copy()
            min_deg = int(min_deg) + first

        array.setflags(write=False)
        self._coeffs = array
        self._min_deg = int(min_deg)
        self._variable = variable

    @property
    def coeffs(self) -> np.ndarray:
        """Dense coefficient array, lowest exponent first."""
        return self._coeffs

    @property
    def min_deg(self) -> int:
        """Lowest exponent with a nonzero coefficient."""
        return self._min_deg

    @property
    def max_deg(self) -> int:
        """Highest exponent with a nonzero coefficient."""
        return self._min_deg + len(self._coeffs) - 1

    @property
    def variable(self) -> str:
        """Variable name."""
        return self._variable

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return self._coeffs.size == 0

    def degree_range(self) -> Tuple[int, int]:
        """
        Lowest and highest exponent.

        Raises:
            SpanUndefinedError: For the zero polynomial
        """
        if self.is_zero():
            raise SpanUndefinedError("span undefined: zero polynomial has no degree")
        return self._min_deg, self.max_deg

    def coefficient(self, exp: int) -> int:
        """Coefficient of ``variable^exp`` (0 when absent)."""
        index = exp - self._min_deg
        if 0 <= index < len(self._coeffs):
            return int(self._coeffs[index])
        return 0

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` for each nonzero term, ascending."""
        for index in np.flatnonzero(self._coeffs):
            yield self._min_deg + int(index), int(self._coeffs[index])

    def to_dict(self) -> Dict[str, object]:
        """Dense form used by the knot-table format."""
        return {"min_deg": self._min_deg, "coeffs": [int(c) for c in self._coeffs]}

    @classmethod
    def from_dict(
        cls, data: Dict[str, object], variable: str = JONES_VARIABLE
    ) -> "LaurentPoly":
        """Inverse of :meth:`to_dict`."""
        return cls(data["coeffs"], int(data["min_deg"]), variable)

    @classmethod
    def from_terms(
        cls, terms: Dict[int, int], variable: str = BRACKET_VARIABLE
    ) -> "LaurentPoly":
        """Build a polynomial from an exponent-to-coefficient map."""
        live = {e: c for e, c in terms.items() if c}
        if not live:
            return cls((), 0, variable)
        low = min(live)
        dense = [0] * (max(live) - low + 1)
        for exp, coeff in live.items():
            dense[exp - low] = coeff
        return cls(dense, low, variable)

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self._variable != other._variable:
            raise ValueError(
                f"Cannot combine polynomials in {self._variable} and {other._variable}"
            )

    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return LaurentPoly([int(other)], 0, self._variable)
        return NotImplemented

    def __add__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if _magnitude(self._coeffs) + _magnitude(other._coeffs) > INT64_LIMIT:
            raise CoefficientOverflowError(
                "coefficient overflow: sum may exceed the int64 range"
            )
        low = min(self._min_deg, other._min_deg)
        high = max(self.max_deg, other.max_deg)
        dense = np.zeros(high - low + 1, dtype=np.int64)
        dense[self._min_deg - low : self._min_deg - low + len(self._coeffs)] += self._coeffs
        dense[other._min_deg - low : other._min_deg - low + len(other._coeffs)] += (
            other._coeffs
        )
        return LaurentPoly(dense, low, self._variable)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self._coeffs, self._min_deg, self._variable)

    def __sub__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly((), 0, self._variable)
        # every product coefficient is a sum of at most min(len) terms
        bound = (
            _magnitude(self._coeffs)
            * _magnitude(other._coeffs)
            * min(len(self._coeffs), len(other._coeffs))
        )
        if bound > INT64_LIMIT:
            raise CoefficientOverflowError(
                "coefficient overflow: product may exceed the int64 range"
            )
        product = np.convolve(self._coeffs, other._coeffs)
        return LaurentPoly(product, self._min_deg + other._min_deg, self._variable)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, (int, np.integer)) or k < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {k!r}")
        result = LaurentPoly([1], 0, self._variable)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            other = LaurentPoly([int(other)], 0, self._variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self._variable == other._variable
            and self._min_deg == other._min_deg
            and np.array_equal(self._coeffs, other._coeffs)
        )

    def __hash__(self) -> int:
        return hash((self._variable, self._min_deg, self._coeffs.tobytes()))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return (
            f"LaurentPoly({[int(c) for c in self._coeffs]}, "
            f"min_deg={self._min_deg}, variable='{self._variable}')"
        )

    def __str__(self) -> str:
        """
        Render terms in increasing exponent, e.g. ``-A^-2 - A^2``.

        Unit coefficients are omitted, ``A^0`` is elided and ``A^1`` prints
        as ``A``.
        """
        if self.is_zero():
            return "0"
        pieces: List[str] = []
        for exp, coeff in self.terms():
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = self._variable if exp == 1 else f"{self._variable}^{exp}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(pieces)


def zero(variable: str = BRACKET_VARIABLE) -> LaurentPoly:
    """The zero polynomial."""
    return LaurentPoly((), 0, variable)


def one(variable: str = BRACKET_VARIABLE) -> LaurentPoly:
    """The constant polynomial 1."""
    return LaurentPoly([1], 0, variable)


def monomial(coeff: int, exp: int, variable: str = BRACKET_VARIABLE) -> LaurentPoly:
    """
    Single-term polynomial ``coeff * A^exp``.

    Example:
        >>> str(monomial(-1, 3))
        '-A^3'
        >>> monomial(0, 5).is_zero()
        True
    """
    return LaurentPoly([coeff], exp, variable)


_DELTA = LaurentPoly([-1, 0, 0, 0, -1], -2)


def delta() -> LaurentPoly:
    """The loop value -A^-2 - A^2."""
    return _DELTA


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact sum."""
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact product."""
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    """Additive inverse."""
    return -p


def power(p: LaurentPoly, k: int) -> LaurentPoly:
    """``p`` raised to a non-negative integer power."""
    return p**k


def mirror(p: LaurentPoly) -> LaurentPoly:
    """
    Substitute the variable by its inverse, sending each exponent e to -e.

    Example:
        >>> str(mirror(monomial(1, 3) + 2))
        'A^-3 + 2'
    """
    if p.is_zero():
        return p
    return LaurentPoly(p.coeffs[::-1], -p.max_deg, p.variable)


def span(p: LaurentPoly) -> int:
    """
    Highest exponent minus lowest exponent.

    Raises:
        SpanUndefinedError: For the zero polynomial
    """
    low, high = p.degree_range()
    return high - low


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """
    Return r with q*r = p over the integers.

    Args:
        p: Dividend
        q: Nonzero divisor in the same variable

    Returns:
        The exact Laurent quotient

    Raises:
        ZeroDivisionError: If q is zero
        NotDivisibleError: If no integer Laurent quotient exists

    Example:
        >>> d = delta()
        >>> divide_exact(d * d, d) == d
        True
    """
    p._check_compatible(q)  # pylint: disable=protected-access
    if q.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    if p.is_zero():
        return p

    # both lowest coefficients are nonzero, so only the polynomial parts matter
    remainder = [int(c) for c in p.coeffs]
    divisor = [int(c) for c in q.coeffs]
    lead = divisor[-1]
    quotient_len = len(remainder) - len(divisor) + 1
    if quotient_len <= 0:
        raise NotDivisibleError(f"not divisible: ({p}) / ({q})")

    quotient = [0] * quotient_len
    for shift in range(quotient_len - 1, -1, -1):
        top = remainder[shift + len(divisor) - 1]
        if top % lead:
            raise NotDivisibleError(f"not divisible: ({p}) / ({q})")
        factor = top // lead
        quotient[shift] = factor
        if factor:
            for i, d in enumerate(divisor):
                remainder[shift + i] -= factor * d
    if any(remainder):
        raise NotDivisibleError(f"not divisible: ({p}) / ({q})")

    if any(abs(c) > INT64_LIMIT for c in quotient):
        raise CoefficientOverflowError("coefficient overflow in exact division")
    return LaurentPoly(quotient, p.min_deg - q.min_deg, p.variable)


def to_t_poly(p: LaurentPoly) -> LaurentPoly:
    """
    Substitute A = t^(-1/4): the A-exponent e becomes the t-exponent -e/4.

    Raises:
        NonIntegralDegreeError: If some exponent is not a multiple of 4

    Example:
        >>> str(to_t_poly(monomial(1, 4) + 1))
        't^-1 + 1'
    """
    if p.variable != BRACKET_VARIABLE:
        raise ValueError(f"Expected a polynomial in A, got one in {p.variable}")
    terms = {}
    for exp, coeff in p.terms():
        if exp % 4:
            raise NonIntegralDegreeError(
                f"non-integral t-degree: A^{exp} does not map to an integral power of t"
            )
        terms[-exp // 4] = coeff
    return LaurentPoly.from_terms(terms, JONES_VARIABLE)
