"""
Pipeline for deciding whether a torus knot sum is obstructed from being
concordant to an L-space knot.
"""

from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

from knotobs.models.knot_sum import KnotSum, Split, format_sum, split
from knotobs.models.laurent import LaurentPoly
from knotobs.models.verdict import Reason, Status, Verdict
from knotobs.obstruct.candidates import candidate_alexander, determinant_ratio
from knotobs.obstruct.checks import (
    alexander_quotient_reason,
    check_corollary_det_one,
    check_cover_order,
    check_determinant_ratio,
    check_divisibility,
    check_positive_sum,
    check_two_strand,
)
from knotobs.parser.expression_parser import parse
from knotobs.utils.config import DEFAULT_CHECKS, get_default_config, load_config
from knotobs.utils.logging import get_logger

logger = get_logger()

Check = Callable[[KnotSum], Optional[Reason]]
SplitCheck = Callable[[KnotSum, Split], Optional[Reason]]

_SIMPLE_CHECKS: Dict[str, Check] = {
    "positive_sum": check_positive_sum,
    "two_strand": check_two_strand,
    "cover_order": check_cover_order,
}
_SPLIT_CHECKS: Dict[str, SplitCheck] = {
    "divisibility": check_divisibility,
    "corollary_det_one": check_corollary_det_one,
}
_CANDIDATE_CHECKS = ("candidate_determinant", "candidate_alexander")


class ObstructionPipeline:
    """
    Runs the enabled obstruction rules over a sum and collects every reason
    that fires.

    Attributes:
        config: Configuration dictionary.
        checks: Names of the enabled rules, in evaluation order.
    """

    def __init__(self, config: Dict):
        """
        Initialize an ObstructionPipeline.

        Args:
            config: Configuration dictionary; ``pipeline.checks`` lists the
                rules to run.

        Raises:
            ValueError: If a check name is unknown.
        """
        self.config = config
        self.checks: List[str] = list(config.get("pipeline", {}).get("checks", DEFAULT_CHECKS))

        unknown = [
            name
            for name in self.checks
            if name not in _SIMPLE_CHECKS
            and name not in _SPLIT_CHECKS
            and name not in _CANDIDATE_CHECKS
        ]
        if unknown:
            raise ValueError(f"Unknown checks: {', '.join(unknown)}")

        logger.debug(f"Pipeline initialized with checks: {', '.join(self.checks)}")

    @classmethod
    def from_config(cls, config_path: Union[str, Path]) -> "ObstructionPipeline":
        """
        Create a pipeline from a configuration file.

        Args:
            config_path: Path to the configuration file.

        Returns:
            ObstructionPipeline instance.
        """
        return cls(load_config(config_path))

    @classmethod
    def from_defaults(cls) -> "ObstructionPipeline":
        """
        Create a pipeline running every rule.

        Returns:
            ObstructionPipeline instance.
        """
        return cls(get_default_config())

    @classmethod
    def with_checks(cls, checks: Sequence[str]) -> "ObstructionPipeline":
        config = get_default_config()
        config["pipeline"]["checks"] = list(checks)
        return cls(config)

    def run(self, k: KnotSum) -> Verdict:
        """
        Evaluate a reduced sum.

        The unknot and single positive torus knots are Concordant. Anything
        else is Obstructed when at least one rule fires and Inconclusive
        otherwise. Candidate invariants are attached whenever they exist.

        Args:
            k: The sum to evaluate.

        Returns:
            Verdict for k.
        """
        text = format_sum(k)

        if k.is_empty() or (len(k) == 1 and k.factors[0].is_positive):
            return Verdict(input=text, status=Status.CONCORDANT, witness=text)

        parts = split(k)
        det_plus, det_minus = determinant_ratio(k)
        ratio_integral = det_plus % det_minus == 0
        candidate_det = det_plus // det_minus if ratio_integral else None

        both_signs = bool(k.positives) and bool(k.negatives)
        candidate_alex: Optional[LaurentPoly] = None
        if both_signs and ratio_integral:
            # A polynomial quotient would evaluate to det(K+)/det(K-) at -1,
            # so a non-integral ratio already rules it out.
            candidate_alex = candidate_alexander(k)

        reasons: List[Reason] = []
        for name in self.checks:
            reason: Optional[Reason]
            if name in _SPLIT_CHECKS:
                reason = _SPLIT_CHECKS[name](k, parts)
            elif name == "candidate_determinant":
                reason = check_determinant_ratio(k)
            elif name == "candidate_alexander":
                reason = None
                if both_signs and candidate_alex is None:
                    reason = alexander_quotient_reason(k)
            else:
                reason = _SIMPLE_CHECKS[name](k)

            if reason is not None:
                logger.debug(f"{reason.code.value} fired on {text}")
                reasons.append(reason)

        status = Status.OBSTRUCTED if reasons else Status.INCONCLUSIVE
        return Verdict(
            input=text,
            status=status,
            reasons=tuple(reasons),
            witness=dict(reasons[0].params) if reasons else None,
            candidate_alexander=candidate_alex,
            candidate_determinant=candidate_det,
        )


_default_pipeline: Optional[ObstructionPipeline] = None


def evaluate(k: KnotSum) -> Verdict:
    """Evaluate k with every rule enabled."""
    global _default_pipeline
    if _default_pipeline is None:
        _default_pipeline = ObstructionPipeline.from_defaults()
    return _default_pipeline.run(k)


def evaluate_text(expr: str) -> Verdict:
    """Parse expr and evaluate it."""
    return evaluate(parse(expr))
