"""
Unit tests for the connected-sum expression parser.
"""

import pytest
from hypothesis import given

from knotobs.models.knot_sum import InvalidTorusKnotError, KnotSum
from knotobs.parser import ExpressionParser, KnotSumSyntaxError, format, parse
from knotobs.parser.expression_parser import tokenize
from tests.strategies import knot_sums


def test_tokenize():
    """Test token kinds and positions."""
    tokens = list(tokenize("-T(2, 13)"))
    assert [t.kind for t in tokens] == ["-", "T", "(", "int", ",", "int", ")", "end"]
    assert tokens[5].value == "13"
    assert tokens[5].position == 6
    assert tokens[-1].position == 9


@pytest.mark.parametrize(
    "text,expected",
    [
        ("T(2,3)", "T(2,3)"),
        ("  T( 3 , 2 )  ", "T(2,3)"),
        ("T(3,5)#-T(2,3)", "-T(2,3) # T(3,5)"),
        ("T(2,3) # T(2,5) # -T(2,15)", "T(2,3) # T(2,5) # -T(2,15)"),
        ("-T(2,15) # T(2,5) # T(3,2)", "T(2,3) # T(2,5) # -T(2,15)"),
        ("U", "U"),
        ("U # T(2,5)", "T(2,5)"),
        ("T(1,7)", "U"),
        ("T(2,5) # -T(5,2)", "U"),
        ("T(2,3) # T(2,3) # -T(2,3)", "T(2,3)"),
    ],
)
def test_parse_normalizes(text, expected):
    """Test that parsing sorts, swaps and cancels."""
    assert format(parse(text)) == expected


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("T(2,3", 5),
        ("T(2;3)", 3),
        ("T(2,3) #", 8),
        ("T(2,3) T(2,5)", 7),
        ("--T(2,3)", 1),
        ("T(a,3)", 2),
        ("# T(2,3)", 0),
        ("-U", 1),
    ],
)
def test_parse_syntax_errors(text, position):
    """Test that malformed input is rejected with the offending position."""
    with pytest.raises(KnotSumSyntaxError) as excinfo:
        parse(text)
    assert excinfo.value.position == position
    assert excinfo.value.text == text


def test_parse_rejects_non_ascii_digits():
    """Test that only ASCII decimal digits form integers."""
    with pytest.raises(KnotSumSyntaxError) as excinfo:
        parse("T(\u0662,\u0663)")
    assert excinfo.value.position == 2

    with pytest.raises(KnotSumSyntaxError):
        parse("T(2,\uff13)")


def test_syntax_error_pointer():
    """Test the caret rendering of a syntax error."""
    with pytest.raises(KnotSumSyntaxError) as excinfo:
        parse("T(2,3) & T(2,5)")
    assert excinfo.value.pointer() == "T(2,3) & T(2,5)\n       ^"


@pytest.mark.parametrize("text", ["T(2,4)", "T(6,9)", "-T(0,3)"])
def test_parse_invalid_torus_knot(text):
    """Test that torus links and degenerate parameters are rejected."""
    with pytest.raises(InvalidTorusKnotError):
        parse(text)


def test_parser_class():
    """Test the parser object directly."""
    k = ExpressionParser("-T(3,4) # T(2,7)").parse()
    assert isinstance(k, KnotSum)
    assert len(k.negatives) == 1


@given(knot_sums(max_size=6))
def test_format_parse_identity(k):
    """Test that parse(format(k)) == k."""
    assert parse(format(k)) == k


@given(knot_sums(max_size=6))
def test_format_is_canonical(k):
    """Test that format(parse(s)) == s for canonical s."""
    s = format(k)
    assert format(parse(s)) == s
