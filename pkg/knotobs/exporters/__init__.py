"""
Exporters module for writing verdicts and scan records.
"""

from knotobs.exporters.scan_exporter import ScanExporter
from knotobs.exporters.verdict_exporter import VerdictExporter, render_verdict

__all__ = ["ScanExporter", "VerdictExporter", "render_verdict"]
