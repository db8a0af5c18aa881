"""
Invariants forced on an L-space knot concordant to a given sum.
"""

from typing import Optional, Tuple

from knotobs.invariants.torus import alexander_fraction, determinant_product
from knotobs.models.knot_sum import KnotSum
from knotobs.models.laurent import LaurentPoly
from knotobs.utils.logging import get_logger

logger = get_logger()


def candidate_alexander(k: KnotSum) -> Optional[LaurentPoly]:
    """
    Alexander polynomial a concordant L-space knot would be forced to have.

    Args:
        k: A reduced sum with at least one positive and one negative factor.

    Returns:
        The exact quotient of the positive product by the negative product,
        or None when it is not a Laurent polynomial.

    Raises:
        ValueError: If k lacks positive or negative factors.
    """
    if not k.positives or not k.negatives:
        raise ValueError(
            f"candidate_alexander needs both positive and negative factors, got {k}"
        )

    quotient = alexander_fraction(k).quotient()
    logger.debug(f"Candidate Alexander polynomial of {k}: {quotient}")
    return quotient


def determinant_ratio(k: KnotSum) -> Tuple[int, int]:
    """(det(K+), det(K-)) where K- collects every negative factor."""
    return determinant_product(k.positives), determinant_product(k.negatives)


def candidate_determinant(k: KnotSum) -> Optional[int]:
    """
    Determinant a concordant L-space knot would be forced to have.

    Args:
        k: A reduced sum.

    Returns:
        det(K+) / det(K-) when it is an integer, otherwise None.
    """
    det_plus, det_minus = determinant_ratio(k)
    if det_plus % det_minus:
        return None
    return det_plus // det_minus
