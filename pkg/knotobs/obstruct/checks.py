"""
Obstruction rules. Each check returns the Reason it fires with, or None.
"""

from typing import Optional

from knotobs.covers.double_cover import (
    UnsupportedInputError,
    double_branched_cover_two_strand,
    h1_divides_check,
    h1_order,
)
from knotobs.invariants.torus import alexander_degree, determinant_sum
from knotobs.models.knot_sum import KnotSum, Split, split
from knotobs.models.verdict import Reason, ReasonCode
from knotobs.obstruct.candidates import candidate_alexander, determinant_ratio
from knotobs.utils.logging import get_logger

logger = get_logger()


def _is_single_positive(k: KnotSum) -> bool:
    return len(k) == 1 and k.factors[0].is_positive


def check_positive_sum(k: KnotSum) -> Optional[Reason]:
    """Fires when k is a sum of more than one positive torus knot."""
    if len(k) > 1 and not k.negatives:
        return Reason(ReasonCode.POSITIVE_SUM_MULTIPLE, {"factor_count": len(k)})
    return None


def check_two_strand(k: KnotSum) -> Optional[Reason]:
    """
    Fires for a two-strand sum other than the unknot or a single positive T(2,q).

    A lone -T(2,q) fires as well.
    """
    if k.is_empty() or not k.is_two_strand() or _is_single_positive(k):
        return None
    return Reason(
        ReasonCode.TWO_STRAND_NOT_SINGLE,
        {"factors": [str(f) for f in k.factors]},
    )


def check_determinant_ratio(k: KnotSum) -> Optional[Reason]:
    """Fires when det(K+)/det(K-) is not an integer."""
    det_plus, det_minus = determinant_ratio(k)
    if det_plus % det_minus:
        return Reason(
            ReasonCode.DETERMINANT_RATIO_NOT_INTEGER,
            {"det_plus": det_plus, "det_minus": det_minus},
        )
    return None


def check_cover_order(k: KnotSum) -> Optional[Reason]:
    """
    Fires when |H_1| of the double branched cover does not divide the
    candidate determinant.

    Only nonempty two-strand sums with an integral determinant ratio are
    tested; the cover order is det(K2+) det(K2-).
    """
    if k.is_empty() or not k.is_two_strand():
        return None

    det_plus, det_minus = determinant_ratio(k)
    if det_plus % det_minus:
        return None
    candidate = det_plus // det_minus

    try:
        divides = h1_divides_check(k, candidate)
    except UnsupportedInputError as e:
        logger.warning(f"Skipping cover check for {k}: {e}")
        return None

    if divides:
        return None
    return Reason(
        ReasonCode.COVER_ORDER_NOT_DIVISOR,
        {"h1": h1_order(double_branched_cover_two_strand(k)), "candidate_det": candidate},
    )


def check_alexander_quotient(k: KnotSum) -> Optional[Reason]:
    """
    Fires when a sum with both signs has no polynomial Alexander quotient.

    One-sided sums are never obstructed by this rule.
    """
    if not k.positives or not k.negatives:
        return None
    if candidate_alexander(k) is not None:
        return None
    return alexander_quotient_reason(k)


def alexander_quotient_reason(k: KnotSum) -> Reason:
    """The AlexanderQuotientNotPolynomial reason for k, with both product degrees."""
    return Reason(
        ReasonCode.ALEXANDER_QUOTIENT_NOT_POLYNOMIAL,
        {
            "numerator_degree": alexander_degree(k.positives),
            "denominator_degree": alexander_degree(k.negatives),
        },
    )


def check_divisibility(k: KnotSum, parts: Optional[Split] = None) -> Optional[Reason]:
    """Fires when det(K2-) does not divide det(K+). parts, when given, is split(k)."""
    parts = parts or split(k)
    det_plus = determinant_sum(parts.k_plus)
    det_minus_two = determinant_sum(parts.k_minus_two)
    if det_plus % det_minus_two:
        return Reason(
            ReasonCode.DIVISIBILITY_FAILS_THM32,
            {"det_minus_two": det_minus_two, "det_plus": det_plus},
        )
    return None


def check_corollary_det_one(k: KnotSum, parts: Optional[Split] = None) -> Optional[Reason]:
    """Fires when K2- is nontrivial and det(K+) = 1 (an empty K+ counts)."""
    parts = parts or split(k)
    if parts.k_minus_two.is_empty():
        return None
    if determinant_sum(parts.k_plus) != 1:
        return None
    return Reason(
        ReasonCode.DET_ONE_COROLLARY,
        {"det_minus_two": determinant_sum(parts.k_minus_two), "det_plus": 1},
    )
