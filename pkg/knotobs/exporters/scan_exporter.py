"""
ScanExporter for writing scan records as JSON-lines or CSV.
"""

import csv
import json
import os
import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

from knotobs.scan.enumerator import CSV_COLUMNS, ScanRecord
from knotobs.utils.logging import get_logger

logger = get_logger()

FORMATS = ("json", "csv")


class ScanExporter:
    """
    Exporter for streaming scan records.

    Attributes:
        output_format: "json" (one JSON object per line) or "csv".
        output_path: File to write; stdout when None.
    """

    def __init__(self, output_format: str = "json", output_path: Optional[Union[str, Path]] = None):
        """
        Initialize a ScanExporter.

        Args:
            output_format: "json" or "csv".
            output_path: File to write; stdout when None.

        Raises:
            ValueError: If the format is unknown.
        """
        if output_format not in FORMATS:
            raise ValueError(f"Unknown output format: {output_format}. Supported formats: {', '.join(FORMATS)}")
        self.output_format = output_format
        self.output_path = Path(output_path) if isinstance(output_path, str) else output_path

        if self.output_path is not None:
            os.makedirs(self.output_path.parent, exist_ok=True)
            logger.info(f"Initialized ScanExporter with output path: {self.output_path}")

    def export(self, records: Iterable[ScanRecord], stream: Optional[TextIO] = None) -> int:
        """
        Write records as they arrive.

        Args:
            records: Records to write, typically a running scan.
            stream: Destination overriding output_path.

        Returns:
            Number of records written.
        """
        if stream is not None:
            return self._write(records, stream)
        if self.output_path is None:
            return self._write(records, sys.stdout)

        with open(self.output_path, "w", newline="") as f:
            count = self._write(records, f)
        logger.info(f"Exported {count} scan records to {self.output_path}")
        return count

    def _write(self, records: Iterable[ScanRecord], stream: TextIO) -> int:
        count = 0
        if self.output_format == "csv":
            writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for record in records:
                writer.writerow(record.to_row())
                count += 1
        else:
            for record in records:
                stream.write(json.dumps(record.to_dict()) + "\n")
                count += 1
        return count
