"""
Closed-form Alexander polynomials and determinants of torus knots and their sums.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Optional

from knotobs.models.knot_sum import KnotSum, TorusKnotFactor
from knotobs.models.laurent import LaurentPoly, divide_exact, eval_int, mul, product
from knotobs.utils.logging import get_logger

logger = get_logger()


@dataclass(frozen=True)
class AlexanderFraction:
    """
    Alexander polynomial of a sum, kept as a formal quotient.

    Attributes:
        numerator: Product of torus Alexander polynomials over positive factors.
        denominator: Product over negative factors.
    """

    numerator: LaurentPoly
    denominator: LaurentPoly

    def ratio_at(self, x: int) -> Fraction:
        """numerator(x) / denominator(x) as an exact rational."""
        return eval_int(self.numerator, x) / eval_int(self.denominator, x)

    def quotient(self) -> Optional[LaurentPoly]:
        """The exact polynomial quotient, or None when it does not exist."""
        return divide_exact(self.numerator, self.denominator)

    def plain_product(self) -> LaurentPoly:
        """Alexander polynomial of the sum itself (mirror-blind)."""
        return mul(self.numerator, self.denominator)


def _t_power_minus_one(n: int) -> LaurentPoly:
    return LaurentPoly({n: 1, 0: -1})


@functools.lru_cache(maxsize=None)
def _torus_alexander_cached(p: int, q: int) -> LaurentPoly:
    num = mul(_t_power_minus_one(p * q), _t_power_minus_one(1))
    den = mul(_t_power_minus_one(p), _t_power_minus_one(q))
    poly = divide_exact(num, den)
    if poly is None:
        raise ArithmeticError(f"Closed form for T({p},{q}) did not divide exactly")
    logger.debug(f"Alexander polynomial of T({p},{q}): {poly}")
    return poly.normalized()


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """
    Alexander polynomial of T(p,q).

    Computed as (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized to
    min_deg 0 with constant term 1. Results are memoized per (p, q).

    Args:
        p: First torus parameter, at least 2.
        q: Second torus parameter, at least 2.

    Returns:
        A polynomial of degree (p-1)(q-1).

    Raises:
        ValueError: If p or q is below 2 or gcd(p,q) != 1.
    """
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) needs p,q >= 2 and gcd(p,q) = 1")
    return _torus_alexander_cached(min(p, q), max(p, q))


def alexander_fraction(k: KnotSum) -> AlexanderFraction:
    """
    Split the Alexander polynomial of k into positive and negative products.

    Args:
        k: A reduced sum.

    Returns:
        AlexanderFraction with numerator over K+ and denominator over K-;
        empty products are 1.
    """
    return AlexanderFraction(
        numerator=product(torus_alexander(f.p, f.q) for f in k.positives),
        denominator=product(torus_alexander(f.p, f.q) for f in k.negatives),
    )


@functools.lru_cache(maxsize=None)
def _determinant_cached(p: int, q: int) -> int:
    return abs(int(eval_int(torus_alexander(p, q), -1)))


def determinant_factor(f: TorusKnotFactor) -> int:
    """|Alexander polynomial of f at -1|; the same for +T(p,q) and -T(p,q)."""
    return _determinant_cached(f.p, f.q)


def determinant_product(factors: Iterable[TorusKnotFactor]) -> int:
    """Product of determinant_factor over factors; 1 when there are none."""
    return prod(determinant_factor(f) for f in factors)


def determinant_sum(k: KnotSum) -> int:
    """Product of determinant_factor over the factors of k; 1 for the unknot."""
    return determinant_product(k.factors)


def alexander_degree(factors: Iterable[TorusKnotFactor]) -> int:
    """
    Degree of the product of the Alexander polynomials of factors.

    Each T(p,q) contributes (p-1)(q-1).
    """
    return sum((f.p - 1) * (f.q - 1) for f in factors)
