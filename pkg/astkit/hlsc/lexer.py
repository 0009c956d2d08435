"""Tokenizer for the HLS-C subset.

Every input character ends up in exactly one token or in skipped
whitespace. Preprocessor lines (``#pragma``, ``#include`` and any other
``#`` directive) become a single directive token; the parser decides which
directives it accepts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from astkit.exceptions import IllegalCharacter, UnterminatedComment, UnterminatedString
from astkit.hlsc.nodes import SourceSpan


class TokenKind(str, Enum):
    IDENT = 'ident'
    INT = 'int'
    FLOAT = 'float'
    CHAR = 'char'
    STRING = 'string'
    OP = 'op'
    PUNCT = 'punct'
    DIRECTIVE = 'directive'
    COMMENT = 'comment'


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    value: str
    span: SourceSpan
    offset: int

    @property
    def end_offset(self) -> int:
        return self.offset + len(self.value)

    def __str__(self) -> str:
        return f'{self.kind.value}({self.value})'


PUNCTUATION = frozenset('(){}[];,')

# Longest operators first so maximal munch falls out of the alternation order.
OPERATORS = (
    '<<=',
    '>>=',
    '...',
    '->',
    '++',
    '--',
    '<<',
    '>>',
    '<=',
    '>=',
    '==',
    '!=',
    '&&',
    '||',
    '+=',
    '-=',
    '*=',
    '/=',
    '%=',
    '&=',
    '|=',
    '^=',
    '::',
    '+',
    '-',
    '*',
    '/',
    '%',
    '<',
    '>',
    '=',
    '!',
    '~',
    '&',
    '|',
    '^',
    '?',
    ':',
    '.',
)

_IDENT = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
_FLOAT = re.compile(r'(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?[fFlL]?|\d+[eE][+-]?\d+[fFlL]?')
_INT = re.compile(r'(?:0[xX][0-9A-Fa-f]+|0[bB][01]+|\d+)(?:[lL]{1,2}[uU]?|[uU][lL]{0,2})?')
_OPERATOR = re.compile('|'.join(re.escape(op) for op in OPERATORS))
_WHITESPACE = ' \t\r\n\f\v'


class _Cursor:
    """Tracks offset plus 1-based line/column while scanning."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.offset = 0
        self.line = 1
        self.col = 1

    def position(self) -> tuple[int, int]:
        return (self.line, self.col)

    def advance(self, count: int) -> None:
        chunk = self.text[self.offset : self.offset + count]
        newlines = chunk.count('\n')
        if newlines:
            self.line += newlines
            self.col = len(chunk) - chunk.rfind('\n')
        else:
            self.col += len(chunk)
        self.offset += count

    def span_from(self, start: tuple[int, int]) -> SourceSpan:
        return SourceSpan(start[0], start[1], self.line, self.col)


def _at_line_start(text: str, offset: int) -> bool:
    line_start = text.rfind('\n', 0, offset) + 1
    return not text[line_start:offset].strip()


def _directive_length(text: str, offset: int) -> int:
    """Length of a preprocessor line including backslash continuations."""
    end = offset
    while True:
        newline = text.find('\n', end)
        if newline == -1:
            return len(text) - offset
        if text[newline - 1] == '\\':
            end = newline + 1
            continue
        # a trailing CR belongs to the line break, not the directive
        stop = newline - 1 if newline > offset and text[newline - 1] == '\r' else newline
        return stop - offset


def _comment_length(cursor: _Cursor) -> int:
    text, offset = cursor.text, cursor.offset
    if text.startswith('//', offset):
        newline = text.find('\n', offset)
        stop = len(text) if newline == -1 else newline
        if stop > offset and text[stop - 1] == '\r':
            stop -= 1
        return stop - offset
    close = text.find('*/', offset + 2)
    if close == -1:
        start = cursor.position()
        cursor.advance(len(text) - offset)
        msg = 'block comment is never closed'
        raise UnterminatedComment(msg, cursor.span_from(start))
    return close + 2 - offset


def _quoted_length(cursor: _Cursor, quote: str) -> int:
    text, offset = cursor.text, cursor.offset
    index = offset + 1
    while index < len(text):
        char = text[index]
        if char == '\\':
            index += 2
            continue
        if char == quote:
            return index + 1 - offset
        if char == '\n':
            break
        index += 1
    start = cursor.position()
    cursor.advance(min(index, len(text)) - offset)
    msg = f'literal starting with {quote} is never closed'
    raise UnterminatedString(msg, cursor.span_from(start))


def _match_token(cursor: _Cursor) -> tuple[TokenKind, int]:
    """Classify the token starting at the cursor and return its length."""
    text, offset = cursor.text, cursor.offset
    char = text[offset]
    if char == '#' and _at_line_start(text, offset):
        return TokenKind.DIRECTIVE, _directive_length(text, offset)
    if text.startswith(('//', '/*'), offset):
        return TokenKind.COMMENT, _comment_length(cursor)
    if char in '"\'':
        kind = TokenKind.STRING if char == '"' else TokenKind.CHAR
        return kind, _quoted_length(cursor, char)
    if match := _FLOAT.match(text, offset):
        return TokenKind.FLOAT, match.end() - offset
    if match := _INT.match(text, offset):
        return TokenKind.INT, match.end() - offset
    if match := _IDENT.match(text, offset):
        return TokenKind.IDENT, match.end() - offset
    if char in PUNCTUATION:
        return TokenKind.PUNCT, 1
    if match := _OPERATOR.match(text, offset):
        return TokenKind.OP, match.end() - offset
    start = cursor.position()
    cursor.advance(1)
    msg = f'illegal character {char!r}'
    raise IllegalCharacter(msg, cursor.span_from(start))


def tokenize(text: str) -> list[Token]:
    """Split *text* into tokens, dropping whitespace.

    Raises:
        UnterminatedComment: a ``/*`` comment runs to end of input.
        UnterminatedString: a string or char literal hits a newline or EOF.
        IllegalCharacter: a character no token can start with.
    """
    cursor = _Cursor(text)
    tokens: list[Token] = []
    while cursor.offset < len(text):
        if text[cursor.offset] in _WHITESPACE:
            cursor.advance(1)
            continue
        start = cursor.position()
        offset = cursor.offset
        kind, length = _match_token(cursor)
        cursor.advance(length)
        tokens.append(Token(kind, text[offset : offset + length], cursor.span_from(start), offset))
    return tokens
