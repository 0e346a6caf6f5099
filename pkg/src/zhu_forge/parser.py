"""Text grammars for elements and mode expressions.

Element grammar::

    element  := ['-'] term (('+'|'-') term)*
    term     := [rational] modeseq 'vac'
    modeseq  := (gen '[' int ']')*
    rational := int ['/' int]

Generators come from the configured presentation. A mode sequence is read as
operator composition, so non-canonical or annihilating sequences are legal
and get normal ordered, e.g. ``a[1]a[-1]vac`` parses to ``vac``.

Mode-expression grammar::

    uexpr := ['-'] uterm (('+'|'-') uterm)*
    uterm := rational | [rational] ('J[' int ']' '(' element ')')+

Modes of the vacuum collapse on construction, so ``J[0](vac)`` is the
scalar word.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .modes import UEAExpression, word_expression
from .voa import FockVector, Presentation, apply_generator_mode

__all__ = ["ParseError", "parse_element", "parse_uea"]


class ParseError(ValueError):
    """Syntax or semantic error, carrying the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\s*/\s*\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<lbrack>\[) | (?P<rbrack>\])
  | (?P<lparen>\() | (?P<rparen>\))
  | (?P<plus>\+) | (?P<minus>-)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append((kind, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        token = self.peek()
        if token[0] != kind:
            raise ParseError(f"expected {what}", token[2])
        return self.advance()


def _parse_signed_int(cursor: _Cursor) -> int:
    sign = 1
    token = cursor.peek()
    if token[0] == "minus":
        cursor.advance()
        sign = -1
    elif token[0] == "plus":
        cursor.advance()
    token = cursor.expect("number", "an integer")
    if "/" in token[1]:
        raise ParseError("expected an integer, not a fraction", token[2])
    return sign * int(token[1])


def _maybe_rational(cursor: _Cursor) -> Fraction | None:
    token = cursor.peek()
    if token[0] != "number":
        return None
    cursor.advance()
    text = token[1].replace(" ", "")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError("zero denominator", token[2])
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _parse_term(cursor: _Cursor, presentation: Presentation) -> FockVector:
    coeff = _maybe_rational(cursor)
    modes: list[tuple[str, int]] = []
    while True:
        kind, value, pos = cursor.peek()
        if kind == "name" and value == "vac":
            cursor.advance()
            break
        if kind == "name":
            if value not in presentation.labels:
                raise ParseError(
                    f"unknown generator {value!r} for presentation {presentation.name}", pos
                )
            cursor.advance()
            cursor.expect("lbrack", "'['")
            index = _parse_signed_int(cursor)
            cursor.expect("rbrack", "']'")
            modes.append((value, index))
            continue
        raise ParseError("expected a generator mode or 'vac'", pos)
    vector = FockVector.vacuum(presentation)
    for gen, index in reversed(modes):
        vector = apply_generator_mode(presentation, gen, index, vector)
        if vector.is_zero:
            break
    if coeff is not None:
        vector = coeff * vector
    return vector


def parse_element(text: str, presentation: Presentation) -> FockVector:
    """Parse an element literal into a canonical vector.

    >>> P = __import__("zhu_forge").builtin_presentation("heisenberg")
    >>> parse_element("1/2 a[-1]a[-1]vac", P) == P.conformal_vector()
    True
    """
    cursor = _Cursor(text)
    if cursor.peek()[0] == "end":
        raise ParseError("empty element", cursor.peek()[2])
    negate = False
    if cursor.peek()[0] == "minus":
        cursor.advance()
        negate = True
    total = _parse_term(cursor, presentation)
    if negate:
        total = -total
    while cursor.peek()[0] != "end":
        kind, _, pos = cursor.peek()
        if kind == "plus":
            cursor.advance()
            total = total + _parse_term(cursor, presentation)
        elif kind == "minus":
            cursor.advance()
            total = total - _parse_term(cursor, presentation)
        else:
            raise ParseError("expected '+' or '-'", pos)
    return total


def _parse_uterm(cursor: _Cursor, presentation: Presentation) -> UEAExpression:
    coeff = _maybe_rational(cursor)
    factors: list[tuple[FockVector, int]] = []
    while True:
        kind, value, pos = cursor.peek()
        if kind == "name" and value == "J":
            cursor.advance()
            cursor.expect("lbrack", "'['")
            shift = _parse_signed_int(cursor)
            cursor.expect("rbrack", "']'")
            cursor.expect("lparen", "'('")
            # Scan the balanced argument and reuse the element parser.
            depth = 1
            start = cursor.peek()[2]
            while True:
                kind2, _, pos2 = cursor.peek()
                if kind2 == "end":
                    raise ParseError("unterminated mode argument", pos2)
                if kind2 == "lparen":
                    depth += 1
                if kind2 == "rparen":
                    depth -= 1
                    if depth == 0:
                        end = pos2
                        cursor.advance()
                        break
                cursor.advance()
            argument_text = cursor.text[start:end]
            try:
                argument = parse_element(argument_text, presentation)
            except ParseError as exc:
                raise ParseError(str(exc).rsplit(" (at column", 1)[0], start + exc.position) from None
            factors.append((argument, shift))
            continue
        break
    if not factors:
        if coeff is None:
            raise ParseError("expected a rational or a mode factor", cursor.peek()[2])
        return UEAExpression.scalar(presentation, coeff)
    expression = word_expression(presentation, factors)
    if coeff is not None:
        expression = coeff * expression
    return expression


def parse_uea(text: str, presentation: Presentation) -> UEAExpression:
    """Parse a mode-expression literal, vacuum modes collapsed."""
    cursor = _Cursor(text)
    if cursor.peek()[0] == "end":
        raise ParseError("empty expression", cursor.peek()[2])
    negate = False
    if cursor.peek()[0] == "minus":
        cursor.advance()
        negate = True
    total = _parse_uterm(cursor, presentation)
    if negate:
        total = -total
    while cursor.peek()[0] != "end":
        kind, _, pos = cursor.peek()
        if kind == "plus":
            cursor.advance()
            total = total + _parse_uterm(cursor, presentation)
        elif kind == "minus":
            cursor.advance()
            total = total - _parse_uterm(cursor, presentation)
        else:
            raise ParseError("expected '+' or '-'", pos)
    return total
