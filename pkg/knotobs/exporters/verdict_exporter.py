"""
VerdictExporter for writing verdicts as JSON.
"""

import json
import os
from pathlib import Path
from typing import List, Union

from knotobs.models.verdict import Verdict
from knotobs.utils.logging import get_logger

logger = get_logger()


def render_verdict(verdict: Verdict, indent: int = 2) -> str:
    """The stable JSON text of a verdict."""
    return json.dumps(verdict.to_dict(), indent=indent)


class VerdictExporter:
    """
    Exporter for saving verdicts to a JSON file.

    Attributes:
        output_path: Path to save the output JSON file.
    """

    def __init__(self, output_path: Union[str, Path]):
        """
        Initialize a VerdictExporter.

        Args:
            output_path: Path to save the output JSON file.
        """
        self.output_path = Path(output_path) if isinstance(output_path, str) else output_path

        os.makedirs(self.output_path.parent, exist_ok=True)

    def export(self, verdicts: List[Verdict]) -> None:
        """
        Export verdicts as a JSON array.

        Args:
            verdicts: Verdicts to save.
        """
        with open(self.output_path, "w") as f:
            json.dump([v.to_dict() for v in verdicts], f, indent=2)

        logger.info(f"Exported {len(verdicts)} verdicts to {self.output_path}")
