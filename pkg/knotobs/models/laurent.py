"""
LaurentPoly model for exact integer Laurent polynomials in t and t^-1.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

_SPLIT_TERMS = re.compile(r"(?<!\^)(?=[+-])")
_TERM = re.compile(r"([+-]?)([0-9]*)(?:(t)(?:\^(-?[0-9]+))?)?")


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """
    An integer Laurent polynomial in t, stored densely.

    The polynomial is held as a valuation ``val`` (the lowest exponent) and a
    tuple of coefficients starting at that exponent. Both ends of ``coeffs``
    are nonzero, so the representation is canonical and dataclass equality is
    polynomial equality. The zero polynomial has ``val == 0`` and no
    coefficients.

    Attributes:
        val: Exponent of the lowest term.
        coeffs: Coefficients from t^val upwards.
    """

    val: int
    coeffs: Tuple[int, ...]

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        """
        Initialize a LaurentPoly from an exponent -> coefficient map.

        Args:
            terms: Finitely supported map; zero coefficients are dropped.
        """
        support = {e: c for e, c in (terms or {}).items() if c != 0}
        if not support:
            object.__setattr__(self, "val", 0)
            object.__setattr__(self, "coeffs", ())
            return

        low, high = min(support), max(support)
        object.__setattr__(self, "val", low)
        object.__setattr__(
            self, "coeffs", tuple(int(support.get(e, 0)) for e in range(low, high + 1))
        )

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], val: int = 0) -> "LaurentPoly":
        """
        Build a polynomial from dense coefficients starting at t^val.

        Args:
            coeffs: Coefficients, lowest exponent first.
            val: Exponent of ``coeffs[0]``.

        Returns:
            The canonical LaurentPoly.
        """
        low, high = 0, len(coeffs)
        while low < high and coeffs[low] == 0:
            low += 1
        while high > low and coeffs[high - 1] == 0:
            high -= 1

        poly = cls.__new__(cls)
        if low == high:
            object.__setattr__(poly, "val", 0)
            object.__setattr__(poly, "coeffs", ())
        else:
            object.__setattr__(poly, "val", val + low)
            object.__setattr__(poly, "coeffs", tuple(int(c) for c in coeffs[low:high]))
        return poly

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """
        Parse the textual form produced by ``str()``, e.g. ``t^6 - t^3 + 1``.

        Args:
            text: Polynomial text in the variable ``t``. Negative exponents
                are written ``t^-2``.

        Returns:
            The parsed LaurentPoly.

        Raises:
            ValueError: If the text is not a sum of integer monomials in t.
        """
        compact = "".join(text.split())
        if not compact:
            raise ValueError("Empty polynomial text")

        terms: Dict[int, int] = {}
        for chunk in _SPLIT_TERMS.split(compact):
            if not chunk:
                continue
            match = _TERM.fullmatch(chunk)
            if match is None or not (match.group(2) or match.group(3)):
                raise ValueError(f"Invalid polynomial term {chunk!r} in {text!r}")

            sign, digits, var, exponent = match.groups()
            coefficient = int(digits) if digits else 1
            if sign == "-":
                coefficient = -coefficient
            if var is None:
                power = 0
            else:
                power = int(exponent) if exponent is not None else 1
            terms[power] = terms.get(power, 0) + coefficient

        return cls(terms)

    @property
    def terms(self) -> Dict[int, int]:
        """Exponent -> coefficient map of the nonzero terms."""
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c != 0}

    @property
    def min_deg(self) -> int:
        if self.is_zero():
            raise ValueError("The zero polynomial has no minimum degree")
        return self.val

    @property
    def max_deg(self) -> int:
        if self.is_zero():
            raise ValueError("The zero polynomial has no maximum degree")
        return self.val + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """max_deg - min_deg, the degree of a polynomial normalized to min_deg 0."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, exponent: int) -> int:
        index = exponent - self.val
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return LaurentPoly.from_coefficients(self.coeffs, self.val + k)

    def normalized(self) -> "LaurentPoly":
        """Shift so min_deg is 0 and flip sign so the leading coefficient is positive."""
        if self.is_zero():
            return self
        sign = -1 if self.coeffs[-1] < 0 else 1
        return LaurentPoly.from_coefficients([sign * c for c in self.coeffs])

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.from_coefficients([-c for c in self.coeffs], self.val)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return add(self, -other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return mul(self, other)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("Negative powers are only defined for monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"

        parts = []
        for exponent in range(self.val + len(self.coeffs) - 1, self.val - 1, -1):
            c = self.coeffs[exponent - self.val]
            if c == 0:
                continue
            if exponent == 0:
                body = str(abs(c))
            else:
                var = "t" if exponent == 1 else f"t^{exponent}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Coefficient-wise sum of two Laurent polynomials.

    Args:
        a: First summand.
        b: Second summand.

    Returns:
        The canonical sum, with cancelled terms dropped.
    """
    if a.is_zero():
        return b
    if b.is_zero():
        return a

    low = min(a.val, b.val)
    high = max(a.val + len(a.coeffs), b.val + len(b.coeffs))
    dense = [0] * (high - low)
    for i, c in enumerate(a.coeffs):
        dense[a.val - low + i] += c
    for i, c in enumerate(b.coeffs):
        dense[b.val - low + i] += c
    return LaurentPoly.from_coefficients(dense, low)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Convolution product of two Laurent polynomials.

    Args:
        a: First factor.
        b: Second factor.

    Returns:
        The canonical product.
    """
    if a.is_zero() or b.is_zero():
        return LaurentPoly.zero()

    dense = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            dense[i + j] += x * y
    return LaurentPoly.from_coefficients(dense, a.val + b.val)


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Product of an iterable of polynomials; the empty product is 1."""
    result = LaurentPoly.one()
    for poly in polys:
        result = mul(result, poly)
    return result


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> Optional[LaurentPoly]:
    """
    Exact division in Z[t, t^-1].

    Long division runs from the top degree down and gives up at the first
    step whose leading coefficient is not divisible by den's leading
    coefficient, or when a nonzero remainder is left over.

    Args:
        num: Dividend.
        den: Divisor.

    Returns:
        The quotient q with q * den == num, or None when no such q with
        integer coefficients exists.

    Raises:
        ZeroDivisionError: If den is the zero polynomial.
    """
    if den.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()

    d = den.coeffs
    if len(num.coeffs) < len(d):
        return None

    remainder = list(num.coeffs)
    lead = d[-1]
    quotient = [0] * (len(remainder) - len(d) + 1)
    for i in range(len(quotient) - 1, -1, -1):
        top = remainder[i + len(d) - 1]
        if top == 0:
            continue
        q, r = divmod(top, lead)
        if r:
            return None
        quotient[i] = q
        for j, c in enumerate(d):
            remainder[i + j] -= q * c

    if any(remainder):
        return None

    result = LaurentPoly.from_coefficients(quotient, num.val - den.val)
    if mul(result, den) != num:
        raise ArithmeticError(f"Re-multiplication check failed for ({num}) / ({den})")
    return result


def eval_int(p: LaurentPoly, x: int) -> Fraction:
    """
    Evaluate p at an integer point exactly.

    Args:
        p: Polynomial to evaluate.
        x: Integer point.

    Returns:
        The exact value as a Fraction; its denominator is 1 whenever
        p has no negative exponents.

    Raises:
        ZeroDivisionError: If x is 0 and p has negative exponents.
    """
    if p.is_zero():
        return Fraction(0)
    if x == 0:
        if p.val < 0:
            raise ZeroDivisionError("Cannot evaluate negative powers of t at 0")
        return Fraction(p.coefficient(0))

    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc * Fraction(x) ** p.val


def is_palindromic(p: LaurentPoly) -> bool:
    """True iff the coefficient sequence equals its reverse (strict, not up to sign)."""
    return p.coeffs == p.coeffs[::-1]
