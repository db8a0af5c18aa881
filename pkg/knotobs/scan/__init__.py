"""
Scan module: bounded enumeration harness.
"""

from knotobs.scan.enumerator import (
    CSV_COLUMNS,
    ScanRecord,
    Scanner,
    enumerate_sums,
    torus_knots,
)

__all__ = ["CSV_COLUMNS", "ScanRecord", "Scanner", "enumerate_sums", "torus_knots"]
