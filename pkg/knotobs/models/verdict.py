"""
Verdict model for the outcome of the obstruction pipeline.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from knotobs.models.laurent import LaurentPoly


class Status(str, Enum):
    """Overall outcome for one sum."""

    CONCORDANT = "Concordant"
    OBSTRUCTED = "Obstructed"
    INCONCLUSIVE = "Inconclusive"


class ReasonCode(str, Enum):
    """One code per obstruction rule."""

    POSITIVE_SUM_MULTIPLE = "PositiveSumMultiple"
    TWO_STRAND_NOT_SINGLE = "TwoStrandNotSingle"
    DETERMINANT_RATIO_NOT_INTEGER = "DeterminantRatioNotInteger"
    COVER_ORDER_NOT_DIVISOR = "CoverOrderNotDivisor"
    ALEXANDER_QUOTIENT_NOT_POLYNOMIAL = "AlexanderQuotientNotPolynomial"
    DIVISIBILITY_FAILS_THM32 = "DivisibilityFailsThm32"
    DET_ONE_COROLLARY = "DetOneCorollary"


@dataclass(frozen=True)
class Reason:
    """
    A fired obstruction together with the values that triggered it.

    Attributes:
        code: Which rule fired.
        params: JSON-serializable parameters, e.g. the failed divisibility pair.
    """

    code: ReasonCode
    params: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def to_dict(self) -> dict:
        """Convert the Reason to a dictionary."""
        return {"code": self.code.value, "params": dict(self.params)}


@dataclass(frozen=True)
class Verdict:
    """
    Result of evaluating one knot sum.

    Attributes:
        input: Canonical text of the evaluated sum.
        status: Concordant, Obstructed or Inconclusive.
        reasons: Every rule that fired, in evaluation order.
        witness: The single torus knot for Concordant verdicts, or the
            parameters of the first reason for Obstructed ones.
        candidate_alexander: The forced Alexander polynomial of a concordant
            L-space knot, when it was computed and exists.
        candidate_determinant: det(K+)/det(K-) when it is a positive integer.
    """

    input: str
    status: Status
    reasons: Tuple[Reason, ...] = ()
    witness: Optional[Any] = None
    candidate_alexander: Optional[LaurentPoly] = None
    candidate_determinant: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.status is Status.OBSTRUCTED) != bool(self.reasons):
            raise ValueError("A verdict is Obstructed exactly when it carries reasons")

    @property
    def codes(self) -> Tuple[ReasonCode, ...]:
        return tuple(r.code for r in self.reasons)

    def has_reason(self, code: ReasonCode) -> bool:
        return code in self.codes

    def to_dict(self) -> dict:
        """Convert the Verdict to its stable JSON object."""
        data: Dict[str, Any] = {
            "input": self.input,
            "status": self.status.value,
            "reasons": [r.to_dict() for r in self.reasons],
        }
        if self.witness is not None:
            data["witness"] = self.witness
        if self.candidate_alexander is not None:
            data["candidate_alexander"] = str(self.candidate_alexander)
        if self.candidate_determinant is not None:
            data["candidate_determinant"] = self.candidate_determinant
        return data
