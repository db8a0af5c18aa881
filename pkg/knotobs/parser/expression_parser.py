"""
ExpressionParser for reading connected sums of torus knots.

Grammar (whitespace is insignificant)::

    sum  := term ('#' term)*
    term := '-'? 'T' '(' int ',' int ')' | 'U'
"""

import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from knotobs.models.knot_sum import KnotSum, format_sum
from knotobs.utils.logging import get_logger

logger = get_logger()

_TOKEN = re.compile(r"\s*(?:(?P<int>[0-9]+)|(?P<sym>[TU(),#-]))")


class KnotSumSyntaxError(ValueError):
    """
    Raised when an expression does not match the grammar.

    Attributes:
        position: 0-based character offset of the offending token.
        text: The full input text.
    """

    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text

    def pointer(self) -> str:
        """The input with a caret under the offending position."""
        return f"{self.text}\n{' ' * self.position}^"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    """
    Split text into tokens.

    Raises:
        KnotSumSyntaxError: On any character outside the grammar.
    """
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise KnotSumSyntaxError(f"Unexpected character {text[pos]!r}", pos, text)
        if match.group("int") is not None:
            yield Token("int", match.group("int"), match.start("int"))
        else:
            yield Token(match.group("sym"), match.group("sym"), match.start("sym"))
        pos = match.end()
    yield Token("end", "", len(text))


class ExpressionParser:
    """
    Recursive-descent parser producing normalized KnotSum values.

    Attributes:
        text: Input being parsed.
    """

    def __init__(self, text: str):
        self.text = text
        self._tokens: List[Token] = list(tokenize(text))
        self._index = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        self._index += 1
        return token

    def _expect(self, kind: str) -> Token:
        token = self._current
        if token.kind != kind:
            found = "end of input" if token.kind == "end" else repr(token.value)
            expected = "an integer" if kind == "int" else repr(kind)
            raise KnotSumSyntaxError(f"Expected {expected}, found {found}", token.position, self.text)
        return self._advance()

    def parse(self) -> KnotSum:
        """
        Parse the whole input.

        Returns:
            The normalized, reduced KnotSum.

        Raises:
            KnotSumSyntaxError: If the text does not match the grammar.
            InvalidTorusKnotError: If a term has gcd(p,q) != 1 or a nonpositive parameter.
        """
        terms = [self._term()]
        while self._current.kind == "#":
            self._advance()
            terms.append(self._term())
        self._expect("end")

        k = KnotSum.from_terms(t for t in terms if t is not None)
        logger.debug(f"Parsed {self.text!r} as {k}")
        return k

    def _term(self) -> Optional[Tuple[int, int, int]]:
        if self._current.kind == "U":
            self._advance()
            return None

        sign = 1
        if self._current.kind == "-":
            self._advance()
            sign = -1
        self._expect("T")
        self._expect("(")
        p = int(self._expect("int").value)
        self._expect(",")
        q = int(self._expect("int").value)
        self._expect(")")
        return (p, q, sign)


def parse(text: str) -> KnotSum:
    """Parse a connected-sum expression such as ``T(2,3) # -T(2,5)``."""
    return ExpressionParser(text).parse()


def format(k: KnotSum) -> str:  # noqa: A001
    """Canonical text of k; inverse of parse."""
    return format_sum(k)
