"""HLS-C subset front end: tokenizer, parser, printer and tree types."""

from astkit.hlsc.lexer import Token, TokenKind, tokenize
from astkit.hlsc.lookup import DEFAULT_TOP, find_function, function_names
from astkit.hlsc.nodes import (
    EXPRESSION_KINDS,
    SEMANTIC_KINDS,
    AstNode,
    NodeKind,
    SourceFile,
    SourceSpan,
    number_tree,
)
from astkit.hlsc.parser import parse, parse_text
from astkit.hlsc.printer import expression_text, for_header, pretty_print

__all__ = [
    'DEFAULT_TOP',
    'EXPRESSION_KINDS',
    'SEMANTIC_KINDS',
    'AstNode',
    'NodeKind',
    'SourceFile',
    'SourceSpan',
    'Token',
    'TokenKind',
    'expression_text',
    'find_function',
    'for_header',
    'function_names',
    'number_tree',
    'parse',
    'parse_text',
    'pretty_print',
    'tokenize',
]
