"""
Covers module: double branched covers of two-strand sums as lens spaces.
"""

from knotobs.covers.double_cover import (
    ReducednessResult,
    UnsupportedInputError,
    double_branched_cover_two_strand,
    h1_divides_check,
    h1_order,
    is_reduced_scoped,
)

__all__ = [
    "ReducednessResult",
    "UnsupportedInputError",
    "double_branched_cover_two_strand",
    "h1_divides_check",
    "h1_order",
    "is_reduced_scoped",
]
