"""
Invariants module: Alexander polynomials and determinants of torus knot sums.
"""

from knotobs.invariants.torus import (
    AlexanderFraction,
    alexander_degree,
    alexander_fraction,
    determinant_factor,
    determinant_product,
    determinant_sum,
    torus_alexander,
)

__all__ = [
    "AlexanderFraction",
    "alexander_degree",
    "alexander_fraction",
    "determinant_factor",
    "determinant_product",
    "determinant_sum",
    "torus_alexander",
]
