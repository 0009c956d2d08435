from __future__ import annotations

from typing import TYPE_CHECKING

from astkit.exceptions.core import AstkitError

if TYPE_CHECKING:
    from astkit.hlsc.nodes import SourceSpan


class ParseError(AstkitError):
    """Base class for lexing and parsing failures.

    Carries the offending source span when one is known.
    """

    log_category = 'parse_error'

    def __init__(self, message: str, span: SourceSpan | None = None) -> None:
        if span is not None:
            message = f'{span}: {message}'
        super().__init__(message)
        self.span = span


class LexError(ParseError):
    """The input could not be split into tokens."""

    log_category = 'lex_error'


class UnterminatedComment(LexError):
    log_category = 'unterminated_comment'


class UnterminatedString(LexError):
    log_category = 'unterminated_string'


class IllegalCharacter(LexError):
    log_category = 'illegal_character'


class HlscSyntaxError(ParseError):
    """A token did not match any production of the HLS-C subset."""

    log_category = 'syntax_error'

    def __init__(self, span: SourceSpan, expected: set[str] | frozenset[str], found: str) -> None:
        self.expected = frozenset(expected)
        self.found = found
        super().__init__(f'expected one of {sorted(self.expected)}, found {found!r}', span)


class UnsupportedConstruct(ParseError):
    """Valid C/C++ that lies outside the supported HLS-C subset."""

    log_category = 'unsupported_construct'

    def __init__(self, span: SourceSpan, construct: str) -> None:
        self.construct = construct
        super().__init__(f'unsupported construct: {construct}', span)


class FunctionNotFound(ParseError):
    log_category = 'function_not_found'

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f'no function named {name!r}')


class AmbiguousFunction(ParseError):
    log_category = 'ambiguous_function'

    def __init__(self, name: str, count: int) -> None:
        self.name = name
        super().__init__(f'{count} definitions of function {name!r}')
