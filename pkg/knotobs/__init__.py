"""
knotobs: Exact obstructions to sums of torus knots being concordant to L-space knots.
"""

__version__ = "0.1.0"

from knotobs.models import KnotSum, LaurentPoly, Verdict
from knotobs.parser import parse
from knotobs.pipeline import ObstructionPipeline, evaluate, evaluate_text

__all__ = [
    "KnotSum",
    "LaurentPoly",
    "ObstructionPipeline",
    "Verdict",
    "evaluate",
    "evaluate_text",
    "parse",
]
