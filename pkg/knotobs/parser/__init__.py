"""
Parser module for connected-sum expressions.
"""

from knotobs.parser.expression_parser import (
    ExpressionParser,
    KnotSumSyntaxError,
    format,
    parse,
)

__all__ = ["ExpressionParser", "KnotSumSyntaxError", "format", "parse"]
