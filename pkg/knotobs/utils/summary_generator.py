"""
Summary generator for scan runs.
"""

import json
import sys
from collections import Counter
from datetime import datetime
from pathlib import Path
from typing import Dict, Iterable, Optional, TextIO, Union

from knotobs.models.verdict import ReasonCode, Status
from knotobs.utils.logging import get_logger

logger = get_logger()


class ScanSummary:
    """
    Counts per status and per reason over one scan.

    Attributes:
        label: Description of the scan, e.g. its family and bounds.
        total: Number of records seen.
        by_status: Record count per Status value.
        by_reason: Record count per ReasonCode value (a record counts once per code).
    """

    def __init__(self, label: str):
        """Initialize an empty summary."""
        self.label = label
        self.start_time = datetime.now()
        self.end_time: Optional[datetime] = None
        self.total = 0
        self.by_status: Counter = Counter({s.value: 0 for s in Status})
        self.by_reason: Counter = Counter()

    def record(self, status: str, reasons: Iterable[str]) -> None:
        """Count one scan record."""
        self.total += 1
        self.by_status[status] += 1
        self.by_reason.update(set(reasons))

    def finalize(self) -> None:
        """Stop the clock."""
        self.end_time = datetime.now()
        logger.info(f"Scan {self.label} finished: {self.summary_line()}")

    @property
    def elapsed_seconds(self) -> float:
        end = self.end_time or datetime.now()
        return (end - self.start_time).total_seconds()

    def to_dict(self) -> Dict:
        """Convert summary to dictionary."""
        return {
            "label": self.label,
            "total": self.total,
            "by_status": dict(self.by_status),
            "by_reason": {code.value: self.by_reason[code.value] for code in ReasonCode},
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }

    def summary_line(self) -> str:
        """One-line rendering: total, then status counts, then nonzero reason counts."""
        parts = [f"total={self.total}"]
        parts += [f"{s.value}={self.by_status[s.value]}" for s in Status]
        parts += [f"{c.value}={self.by_reason[c.value]}" for c in ReasonCode if self.by_reason[c.value]]
        return "summary: " + " ".join(parts)

    def save_to_file(self, output_path: Union[str, Path]) -> None:
        """Save summary to a JSON file."""
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        with open(output_path, "w") as f:
            json.dump(self.to_dict(), f, indent=2)
        logger.info(f"Scan summary saved to: {output_path}")

    def print_summary(self, stream: Optional[TextIO] = None) -> None:
        """Print the one-line summary, to stderr by default."""
        print(self.summary_line(), file=stream or sys.stderr)
