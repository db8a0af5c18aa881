"""
Data models for the knotobs library.
"""

from knotobs.models.knot_sum import (
    InvalidTorusKnotError,
    KnotSum,
    Split,
    TorusKnotFactor,
    connected_sum,
    format_sum,
    mirror,
    split,
)
from knotobs.models.laurent import LaurentPoly
from knotobs.models.lens_space import LensSpace, LensSpaceSum
from knotobs.models.scan_config import ScanConfig
from knotobs.models.verdict import Reason, ReasonCode, Status, Verdict

__all__ = [
    "InvalidTorusKnotError",
    "KnotSum",
    "LaurentPoly",
    "LensSpace",
    "LensSpaceSum",
    "Reason",
    "ReasonCode",
    "ScanConfig",
    "Split",
    "Status",
    "TorusKnotFactor",
    "Verdict",
    "connected_sum",
    "format_sum",
    "mirror",
    "split",
]
