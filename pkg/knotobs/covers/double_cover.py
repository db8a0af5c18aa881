"""
Double branched covers of two-strand torus knot sums as lens-space sums.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from knotobs.models.knot_sum import KnotSum
from knotobs.models.lens_space import LensSpace, LensSpaceSum
from knotobs.utils.logging import get_logger

logger = get_logger()

# L(m,1) is reduced unless m is this value.
NON_REDUCED_L_M1 = 4


class UnsupportedInputError(ValueError):
    """Raised for inputs outside the cases the cover computations handle."""


@dataclass(frozen=True)
class ReducednessResult:
    """
    Outcome of the scoped reducedness test.

    Attributes:
        reduced: Whether the lens-space sum is reduced.
        reason: Why it is not, when reduced is False.
    """

    reduced: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.reduced


def double_branched_cover_two_strand(k: KnotSum) -> LensSpaceSum:
    """
    Lens-space model of the double branched cover of a two-strand sum.

    +T(2,q) gives L(q,q-1) and -T(2,q) gives L(q,1); the empty sum gives S^3.

    Args:
        k: A sum whose factors all have p = 2.

    Returns:
        The connected sum of lens spaces.

    Raises:
        UnsupportedInputError: If any factor has p >= 3.
    """
    wide = [str(f) for f in k.factors if not f.is_two_strand]
    if wide:
        raise UnsupportedInputError(
            f"Double branched covers are only modeled for T(2,q) factors; got {', '.join(wide)}"
        )
    return LensSpaceSum(
        tuple(LensSpace(f.q, f.q - 1 if f.is_positive else 1) for f in k.factors)
    )


def h1_order(s: LensSpaceSum) -> int:
    """|H_1| of a lens-space sum: the product of the p parameters, 1 for S^3."""
    return s.h1_order


def is_reduced_scoped(s: LensSpaceSum) -> ReducednessResult:
    """
    Reducedness of a sum of lens spaces of the forms L(m,1) and L(q,q-1).

    The sum fails when it contains L(4,1), or a pair L(p,q), L(p,p-q). When
    q = p - q the pair needs two copies of the summand.

    Args:
        s: Lens-space sum with summands of the supported forms only.

    Returns:
        ReducednessResult, truthy when reduced.

    Raises:
        UnsupportedInputError: For a summand L(p,q) with 1 < q < p-1.
    """
    for summand in s:
        if summand.q != 1 and summand.q != summand.p - 1:
            raise UnsupportedInputError(
                f"{summand} is not of the form L(m,1) or L(q,q-1); "
                "general reducedness is not implemented"
            )

    counts = Counter(s.summands)
    four = LensSpace(NON_REDUCED_L_M1, 1)
    if counts[four]:
        return ReducednessResult(False, f"contains {four}")

    for summand in sorted(counts):
        partner = summand.partner()
        needed = 2 if partner == summand else 1
        if partner >= summand and counts[partner] >= needed:
            return ReducednessResult(False, f"contains the pair {summand} # {partner}")

    return ReducednessResult(True)


def h1_divides_check(k: KnotSum, target: int) -> bool:
    """
    Whether |H_1| of the double branched cover of k divides target.

    Args:
        k: A two-strand sum whose cover passes is_reduced_scoped.
        target: Positive integer, e.g. a candidate determinant.

    Returns:
        True iff h1_order(cover of k) divides target.

    Raises:
        UnsupportedInputError: If k is not two-strand or its cover is not reduced.
        ValueError: If target is not positive.
    """
    if target <= 0:
        raise ValueError(f"Target must be a positive integer, got {target}")

    cover = double_branched_cover_two_strand(k)
    reducedness = is_reduced_scoped(cover)
    if not reducedness:
        raise UnsupportedInputError(f"Cover {cover} is not reduced: {reducedness.reason}")

    order = h1_order(cover)
    logger.debug(f"|H_1({cover})| = {order}, target {target}")
    return target % order == 0
