"""
ScanConfig model for bounded enumeration runs.
"""

from typing import Any, Dict, Literal

from pydantic import BaseModel, Field, model_validator

Family = Literal["two-strand", "general"]
OutputFormat = Literal["json", "csv"]


class ScanConfig(BaseModel):
    """
    Bounds and output settings for a scan.

    Attributes:
        max_q: Largest torus parameter q to enumerate.
        max_p: Largest torus parameter p; forced to 2 for the two-strand family.
        max_factors_per_sign: Largest number of positive (and of negative) factors.
        family: "two-strand" (odd q, p = 2) or "general".
        output_format: "json" for JSON-lines or "csv".
        positives_only: Enumerate sums without negative factors.
    """

    model_config = {"frozen": True}

    max_q: int = Field(default=9, ge=3)
    max_p: int = Field(default=2, ge=2)
    max_factors_per_sign: int = Field(default=2, ge=1)
    family: Family = "two-strand"
    output_format: OutputFormat = "json"
    positives_only: bool = False

    @model_validator(mode="before")
    @classmethod
    def _force_two_strand_bounds(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("family", "two-strand") == "two-strand":
            data = {**data, "max_p": 2}
        return data

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "ScanConfig":
        """
        Build a ScanConfig from the ``scan`` section of a configuration dict.

        Keys ending in ``_env`` are ignored; ``format`` is accepted as an alias
        for ``output_format``.
        """
        values = {k: v for k, v in config.items() if not k.endswith("_env")}
        if "format" in values:
            values["output_format"] = values.pop("format")
        return cls(**values)
