"""
Obstruct module: candidate invariants and obstruction rules.
"""

from knotobs.obstruct.candidates import (
    candidate_alexander,
    candidate_determinant,
    determinant_ratio,
)
from knotobs.obstruct.checks import (
    alexander_quotient_reason,
    check_alexander_quotient,
    check_corollary_det_one,
    check_cover_order,
    check_determinant_ratio,
    check_divisibility,
    check_positive_sum,
    check_two_strand,
)

__all__ = [
    "alexander_quotient_reason",
    "candidate_alexander",
    "candidate_determinant",
    "check_alexander_quotient",
    "check_corollary_det_one",
    "check_cover_order",
    "check_determinant_ratio",
    "check_divisibility",
    "check_positive_sum",
    "check_two_strand",
    "determinant_ratio",
]
