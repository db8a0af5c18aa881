"""
Bounded enumeration of reduced torus knot sums, evaluated one by one.
"""

import itertools
import sys
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from knotobs.invariants.torus import determinant_sum
from knotobs.models.knot_sum import NEGATIVE, POSITIVE, KnotSum, TorusKnotFactor, split
from knotobs.models.scan_config import ScanConfig
from knotobs.models.verdict import Verdict
from knotobs.pipeline import ObstructionPipeline
from knotobs.utils.logging import get_logger
from knotobs.utils.summary_generator import ScanSummary

logger = get_logger()

CSV_COLUMNS = [
    "expr",
    "status",
    "reasons",
    "det_plus",
    "det_minus_other",
    "det_minus_two",
    "candidate_det",
    "candidate_alex_degree",
]


@dataclass(frozen=True)
class ScanRecord:
    """
    One evaluated sum as emitted by a scan.

    Attributes:
        expr: Canonical text of the sum.
        status: Verdict status value.
        reasons: Codes of every fired rule, in evaluation order.
        det_plus: det(K+).
        det_minus_other: det(K-) over negative factors with p >= 3.
        det_minus_two: det(K2-).
        candidate_det: Candidate determinant, if integral.
        candidate_alex_degree: Degree of the candidate Alexander polynomial, if it exists.
    """

    expr: str
    status: str
    reasons: Tuple[str, ...]
    det_plus: int
    det_minus_other: int
    det_minus_two: int
    candidate_det: Optional[int]
    candidate_alex_degree: Optional[int]

    @classmethod
    def from_verdict(cls, k: KnotSum, verdict: Verdict) -> "ScanRecord":
        parts = split(k)
        alex = verdict.candidate_alexander
        return cls(
            expr=verdict.input,
            status=verdict.status.value,
            reasons=tuple(code.value for code in verdict.codes),
            det_plus=determinant_sum(parts.k_plus),
            det_minus_other=determinant_sum(parts.k_minus_other),
            det_minus_two=determinant_sum(parts.k_minus_two),
            candidate_det=verdict.candidate_determinant,
            candidate_alex_degree=None if alex is None else alex.span,
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert the record to a JSON-ready dictionary."""
        return {
            "expr": self.expr,
            "status": self.status,
            "reasons": list(self.reasons),
            "det_plus": self.det_plus,
            "det_minus_other": self.det_minus_other,
            "det_minus_two": self.det_minus_two,
            "candidate_det": self.candidate_det,
            "candidate_alex_degree": self.candidate_alex_degree,
        }

    def to_row(self) -> Dict[str, str]:
        """Convert the record to a CSV row; absent values become empty cells."""
        row = {}
        for column, value in self.to_dict().items():
            if column == "reasons":
                row[column] = ";".join(value)
            else:
                row[column] = "" if value is None else str(value)
        return row


def torus_knots(config: ScanConfig) -> List[Tuple[int, int]]:
    """
    Torus knot parameters within the scan bounds, sorted.

    The two-strand family uses T(2,q) with odd q; the general family uses
    every coprime 2 <= p < q with p <= max_p.
    """
    if config.family == "two-strand":
        return [(2, q) for q in range(3, config.max_q + 1, 2)]
    return [
        (p, q)
        for p in range(2, config.max_p + 1)
        for q in range(p + 1, config.max_q + 1)
        if gcd(p, q) == 1
    ]


def _multisets(knots: List[Tuple[int, int]], max_size: int) -> List[Tuple[Tuple[int, int], ...]]:
    return [
        combo
        for size in range(max_size + 1)
        for combo in itertools.combinations_with_replacement(knots, size)
    ]


def enumerate_sums(config: ScanConfig) -> List[KnotSum]:
    """
    Every reduced sum within the bounds, each once, in canonical order.

    Sums are ordered by factor count, then by their sorted factor tuples.
    A positive and a negative copy of the same T(p,q) never appear together.

    Args:
        config: Scan bounds.

    Returns:
        List of KnotSum, starting with the unknot.
    """
    knots = torus_knots(config)
    positives = _multisets(knots, config.max_factors_per_sign)
    negatives = [()] if config.positives_only else positives

    sums = []
    for pos in positives:
        pos_keys = set(pos)
        for neg in negatives:
            if pos_keys.intersection(neg):
                continue
            factors = [TorusKnotFactor(p, q, POSITIVE) for p, q in pos]
            factors += [TorusKnotFactor(p, q, NEGATIVE) for p, q in neg]
            sums.append(KnotSum(tuple(factors)))

    sums.sort(key=lambda k: (len(k), k.factors))
    logger.info(f"Enumerated {len(sums)} sums from {len(knots)} torus knots")
    return sums


class Scanner:
    """
    Evaluates every sum in a bounded family.

    Attributes:
        config: Scan bounds and output settings.
        pipeline: Pipeline used for each evaluation.
        show_progress: Whether to draw a progress bar on stderr.
    """

    def __init__(
        self,
        config: ScanConfig,
        pipeline: Optional[ObstructionPipeline] = None,
        show_progress: bool = False,
    ):
        self.config = config
        self.pipeline = pipeline or ObstructionPipeline.from_defaults()
        self.show_progress = show_progress
        self.summary = ScanSummary(self.label)

    @property
    def label(self) -> str:
        c = self.config
        suffix = ", positives only" if c.positives_only else ""
        return (
            f"{c.family} (max_p={c.max_p}, max_q={c.max_q}, "
            f"max_factors_per_sign={c.max_factors_per_sign}{suffix})"
        )

    def run(self) -> Iterator[ScanRecord]:
        """
        Evaluate each enumerated sum and yield its record, counting it in
        ``self.summary``. The summary is finalized once the iterator is exhausted.
        """
        sums = enumerate_sums(self.config)
        logger.info(f"Scanning {self.label}")

        for k in tqdm(
            sums,
            desc="Scanning sums",
            file=sys.stderr,
            disable=not self.show_progress,
        ):
            record = ScanRecord.from_verdict(k, self.pipeline.run(k))
            self.summary.record(record.status, record.reasons)
            yield record

        self.summary.finalize()
