"""
Unit tests for the obstruction pipeline and verdicts.
"""

import json

import pytest
from hypothesis import given

from knotobs.models.knot_sum import mirror
from knotobs.models.laurent import LaurentPoly
from knotobs.models.verdict import Reason, ReasonCode, Status, Verdict
from knotobs.pipeline import ObstructionPipeline, evaluate, evaluate_text
from tests.strategies import knot_sums

R = ReasonCode


@pytest.mark.parametrize("text", ["U", "T(2,3)", "T(3,7)", "T(2,5) # T(3,4) # -T(3,4)"])
def test_concordant(text):
    """Test that the unknot and single positive torus knots are Concordant."""
    verdict = evaluate_text(text)
    assert verdict.status is Status.CONCORDANT
    assert verdict.reasons == ()
    assert verdict.witness == verdict.input


def test_mirror_of_concordant_is_obstructed(knot):
    """Test that -T(2,3) is obstructed while T(2,3) is not."""
    assert evaluate(knot("T(2,3)")).status is Status.CONCORDANT
    verdict = evaluate(mirror(knot("T(2,3)")))
    assert verdict.status is Status.OBSTRUCTED
    assert verdict.codes == (
        R.TWO_STRAND_NOT_SINGLE,
        R.DETERMINANT_RATIO_NOT_INTEGER,
        R.DIVISIBILITY_FAILS_THM32,
        R.DET_ONE_COROLLARY,
    )


def test_positive_sum_is_obstructed():
    """Test a sum of two positive torus knots."""
    verdict = evaluate_text("T(2,3) # T(3,4)")
    assert verdict.codes == (R.POSITIVE_SUM_MULTIPLE,)
    assert verdict.witness == {"factor_count": 2}
    assert verdict.candidate_determinant == 9
    assert verdict.candidate_alexander is None


def test_two_strand_sum_with_unit_candidate_determinant():
    """Test T(2,3) # T(2,5) # -T(2,15)."""
    verdict = evaluate_text("T(2,3) # T(2,5) # -T(2,15)")
    assert verdict.status is Status.OBSTRUCTED
    assert verdict.codes == (
        R.TWO_STRAND_NOT_SINGLE,
        R.COVER_ORDER_NOT_DIVISOR,
        R.ALEXANDER_QUOTIENT_NOT_POLYNOMIAL,
    )
    assert verdict.candidate_determinant == 1
    assert verdict.candidate_alexander is None


def test_divisibility_failure():
    """Test T(3,5) # -T(2,3), where det(K2-) = 3 does not divide det(K+) = 1."""
    verdict = evaluate_text("T(3,5) # -T(2,3)")
    assert verdict.status is Status.OBSTRUCTED
    assert verdict.has_reason(R.DIVISIBILITY_FAILS_THM32)
    assert verdict.has_reason(R.DET_ONE_COROLLARY)
    assert verdict.has_reason(R.DETERMINANT_RATIO_NOT_INTEGER)
    assert verdict.has_reason(R.ALEXANDER_QUOTIENT_NOT_POLYNOMIAL)
    assert verdict.candidate_determinant is None


def test_inconclusive_with_candidate_alexander():
    """Test T(4,5) # -T(2,5), which no rule obstructs."""
    verdict = evaluate_text("T(4,5) # -T(2,5)")
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.reasons == ()
    assert verdict.witness is None
    assert verdict.candidate_alexander == LaurentPoly.parse("t^8 - t^6 + t^4 - t^2 + 1")
    assert verdict.candidate_determinant == 1


def test_two_strand_with_polynomial_quotient():
    """Test T(2,9) # -T(2,3), obstructed although its quotient is a polynomial."""
    verdict = evaluate_text("T(2,9) # -T(2,3)")
    assert verdict.codes == (R.TWO_STRAND_NOT_SINGLE, R.COVER_ORDER_NOT_DIVISOR)
    assert verdict.witness == {"factors": ["-T(2,3)", "T(2,9)"]}
    assert str(verdict.candidate_alexander) == "t^6 - t^3 + 1"
    assert verdict.candidate_determinant == 3


def test_lone_wide_negative_is_inconclusive():
    """Test that -T(3,5) escapes every rule."""
    verdict = evaluate_text("-T(3,5)")
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.candidate_determinant == 1


def test_verdict_to_dict():
    """Test the stable JSON shape of a verdict."""
    data = json.loads(json.dumps(evaluate_text("T(2,9) # -T(2,3)").to_dict()))
    assert list(data) == [
        "input",
        "status",
        "reasons",
        "witness",
        "candidate_alexander",
        "candidate_determinant",
    ]
    assert data["input"] == "-T(2,3) # T(2,9)"
    assert data["status"] == "Obstructed"
    assert data["reasons"][1] == {
        "code": "CoverOrderNotDivisor",
        "params": {"h1": 27, "candidate_det": 3},
    }

    concordant = evaluate_text("T(2,3)").to_dict()
    assert concordant == {"input": "T(2,3)", "status": "Concordant", "reasons": [], "witness": "T(2,3)"}


def test_verdict_status_must_match_reasons():
    """Test that Obstructed verdicts carry reasons and others do not."""
    with pytest.raises(ValueError):
        Verdict(input="U", status=Status.OBSTRUCTED)
    with pytest.raises(ValueError):
        Verdict(
            input="-T(2,3)",
            status=Status.INCONCLUSIVE,
            reasons=(Reason(R.TWO_STRAND_NOT_SINGLE),),
        )


def test_with_checks_limits_rules(knot):
    """Test that disabled rules never fire."""
    pipeline = ObstructionPipeline.with_checks(["divisibility"])
    verdict = pipeline.run(knot("T(2,9) # -T(2,3)"))
    assert verdict.status is Status.INCONCLUSIVE
    assert verdict.candidate_determinant == 3

    verdict = pipeline.run(knot("T(3,5) # -T(2,3)"))
    assert verdict.codes == (R.DIVISIBILITY_FAILS_THM32,)


def test_unknown_check_rejected():
    """Test that misspelled rule names are rejected."""
    with pytest.raises(ValueError, match="Unknown checks"):
        ObstructionPipeline.with_checks(["divisibility", "no_such_rule"])


def test_default_pipeline_runs_every_rule(pipeline, default_config):
    """Test that the default pipeline enables all rules in order."""
    assert pipeline.checks == default_config["pipeline"]["checks"]


@given(knot_sums())
def test_status_matches_reasons(k):
    """Test the Obstructed-iff-reasons invariant over random sums."""
    verdict = evaluate(k)
    if verdict.status is Status.OBSTRUCTED:
        assert verdict.reasons
        assert verdict.witness == verdict.reasons[0].params
    else:
        assert not verdict.reasons


@given(knot_sums(max_size=4))
def test_candidates_agree(k):
    """Test that an attached Alexander quotient implies an integral determinant ratio."""
    verdict = evaluate(k)
    if verdict.candidate_alexander is not None:
        assert verdict.candidate_determinant is not None
