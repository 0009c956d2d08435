"""Recursive-descent parser for the HLS-C subset.

Supported: functions with value/reference/pointer parameters, declarations
with storage/cv qualifiers, array dimensions and brace initializers,
if/else, for, while, switch/case, return, break, continue, assignments,
calls, binary/unary expressions, subscripts, ``#pragma``/``#include`` and
comments. Templated types such as ``ap_uint<11>`` are kept as opaque text.
Anything else raises :class:`UnsupportedConstruct` instead of mis-parsing.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, replace

from hotlog import get_logger

from astkit.exceptions import HlscSyntaxError, UnsupportedConstruct
from astkit.hlsc.lexer import Token, TokenKind, tokenize
from astkit.hlsc.nodes import AstNode, NodeKind, SourceFile, SourceSpan, number_tree
from astkit.hlsc.printer import expression_text

logger = get_logger(__name__)

QUALIFIERS = frozenset({'static', 'const', 'volatile', 'extern', 'inline', 'register', 'constexpr'})
BUILTIN_WORDS = frozenset(
    {'void', 'bool', 'char', 'short', 'int', 'long', 'float', 'double', 'signed', 'unsigned', 'auto'},
)
UNSUPPORTED_KEYWORDS = frozenset(
    {
        'asm',
        'class',
        'delete',
        'do',
        'enum',
        'goto',
        'namespace',
        'new',
        'sizeof',
        'struct',
        'template',
        'this',
        'throw',
        'try',
        'typedef',
        'union',
        'using',
    },
)
STATEMENT_KEYWORDS = frozenset(
    {'if', 'else', 'for', 'while', 'switch', 'case', 'default', 'return', 'break', 'continue'},
)
KEYWORDS = QUALIFIERS | BUILTIN_WORDS | UNSUPPORTED_KEYWORDS | STATEMENT_KEYWORDS | {'true', 'false'}

ASSIGN_OPS = frozenset({'=', '+=', '-=', '*=', '/=', '%=', '&=', '|=', '^=', '<<=', '>>='})
BINARY_PRECEDENCE = {
    '||': 1,
    '&&': 2,
    '|': 3,
    '^': 4,
    '&': 5,
    '==': 6,
    '!=': 6,
    '<': 7,
    '>': 7,
    '<=': 7,
    '>=': 7,
    '<<': 8,
    '>>': 8,
    '+': 9,
    '-': 9,
    '*': 10,
    '/': 10,
    '%': 10,
}
PREFIX_OPS = frozenset({'-', '+', '!', '~', '++', '--', '*', '&'})
TEMPLATE_ARG_OPS = frozenset({'<', '>', '>>', '::', '*', '&', '+', '-', '/'})
TEMPLATE_FOLLOWERS = frozenset({'(', '{', '::'})
MAX_NESTING = 64

_DIRECTIVE = re.compile(r'#\s*(\w+)\s*(.*)', re.DOTALL)


@dataclass(frozen=True)
class _TypeInfo:
    text: str
    span: SourceSpan


def _directive_parts(token: Token) -> tuple[str, str]:
    match = _DIRECTIVE.match(token.value)
    if match is None:
        return '', ''
    body = ' '.join(match.group(2).replace('\\\n', ' ').split())
    return match.group(1), body


class Parser:
    """Single-use parser over one source text."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self._last: Token | None = None
        self._depth = 0

    # ------------------------------------------------------------------
    # token access
    # ------------------------------------------------------------------

    def _index(self, ahead: int = 0) -> int | None:
        """Index of the ``ahead``-th non-comment token from the cursor."""
        index = self.pos
        seen = -1
        while index < len(self.tokens):
            if self.tokens[index].kind is not TokenKind.COMMENT:
                seen += 1
                if seen == ahead:
                    return index
            index += 1
        return None

    def _peek(self, ahead: int = 0) -> Token | None:
        index = self._index(ahead)
        return None if index is None else self.tokens[index]

    def _raw(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> Token:
        index = self._index()
        if index is None:
            raise HlscSyntaxError(self._eof_span(), {'<token>'}, '<eof>')
        token = self.tokens[index]
        self.pos = index + 1
        self._last = token
        return token

    def _is(self, value: str, ahead: int = 0) -> bool:
        token = self._peek(ahead)
        return token is not None and token.value == value and token.kind is not TokenKind.STRING

    def _is_ident(self, ahead: int = 0) -> bool:
        token = self._peek(ahead)
        return token is not None and token.kind is TokenKind.IDENT and token.value not in KEYWORDS

    def _expect(self, *values: str) -> Token:
        token = self._peek()
        if token is None or token.value not in values:
            self._fail(set(values))
        return self._next()

    def _expect_ident(self) -> Token:
        if not self._is_ident():
            self._fail({'<identifier>'})
        return self._next()

    def _fail(self, expected: set[str]) -> None:
        token = self._peek()
        if token is None:
            raise HlscSyntaxError(self._eof_span(), expected, '<eof>')
        if token.kind is TokenKind.IDENT and token.value in UNSUPPORTED_KEYWORDS:
            raise UnsupportedConstruct(token.span, token.value)
        raise HlscSyntaxError(token.span, expected, token.value)

    def _eof_span(self) -> SourceSpan:
        end = _end_position(self.text)
        return SourceSpan(end[0], end[1], end[0], end[1])

    def _span_from(self, start: SourceSpan) -> SourceSpan:
        assert self._last is not None  # noqa: S101 - a token was consumed before any span is closed
        return start.merge(self._last.span)

    def _join(self, first: int, last: int) -> str:
        """Whitespace-normalized text of tokens ``first..last`` with comments dropped."""
        parts: list[str] = []
        space = False
        previous_end: int | None = None
        for token in self.tokens[first : last + 1]:
            if previous_end is not None and token.offset > previous_end:
                space = True
            previous_end = token.end_offset
            if token.kind is TokenKind.COMMENT:
                continue
            if space and parts:
                parts.append(' ')
            parts.append(token.value)
            space = False
        return ''.join(parts)

    @contextmanager
    def _nested(self, span: SourceSpan) -> Iterator[None]:
        """Track statement and expression nesting; deeper than MAX_NESTING is rejected."""
        if self._depth >= MAX_NESTING:
            raise UnsupportedConstruct(span, f'nesting deeper than {MAX_NESTING} levels')
        self._depth += 1
        try:
            yield
        finally:
            self._depth -= 1

    # ------------------------------------------------------------------
    # translation unit
    # ------------------------------------------------------------------

    def parse_translation_unit(self) -> AstNode:
        items: list[AstNode] = []
        while (token := self._raw()) is not None:
            if token.kind is TokenKind.COMMENT:
                items.append(self._comment())
            elif token.kind is TokenKind.DIRECTIVE:
                items.append(self._directive())
            else:
                items.extend(self._external_declaration())
        end = _end_position(self.text)
        span = SourceSpan(1, 1, end[0], end[1])
        return AstNode(NodeKind.TRANSLATION_UNIT, span, children=tuple(items))

    def _comment(self) -> AstNode:
        token = self.tokens[self.pos]
        self.pos += 1
        self._last = token
        return AstNode(NodeKind.COMMENT, token.span, name=token.value)

    def _directive(self) -> AstNode:
        token = self.tokens[self.pos]
        self.pos += 1
        self._last = token
        word, body = _directive_parts(token)
        if word == 'pragma':
            return AstNode(NodeKind.PRAGMA, token.span, name=body)
        if word == 'include':
            return AstNode(NodeKind.INCLUDE, token.span, name=body)
        raise UnsupportedConstruct(token.span, f'#{word or token.value}')

    def _external_declaration(self) -> list[AstNode]:
        start = self._peek()
        type_info = self._parse_type()
        if start is None or type_info is None:
            self._fail({'<declaration>', '<function definition>'})
        if self._is_ident() and self._is('(', 1):
            return [self._function_def(type_info)]
        return self._declarators(type_info, start.span, terminator=';')

    # ------------------------------------------------------------------
    # types
    # ------------------------------------------------------------------

    def _parse_type(self) -> _TypeInfo | None:
        """Parse a type at the cursor; rewind and return None if there is none."""
        save = self.pos
        first = self._index()
        core_last = self._type_core()
        if first is None or core_last is None:
            self.pos = save
            return None
        core = self._join(first, core_last)
        refs = ''
        while self._is('*') or self._is('&') or self._is('&&'):
            refs += self._next().value
        span = self.tokens[first].span.merge(self._last.span if self._last else self.tokens[first].span)
        return _TypeInfo(text=core + refs, span=span)

    def _word(self) -> str | None:
        token = self._peek()
        return token.value if token is not None and token.kind is TokenKind.IDENT else None

    def _type_core(self) -> int | None:
        """Consume qualifiers, base type and template arguments; return last index."""
        while self._word() in QUALIFIERS:
            self._next()
        if self._word() in BUILTIN_WORDS:
            while self._word() in BUILTIN_WORDS | {'const'}:
                self._next()
            return self.pos - 1
        if not self._is_ident():
            return None
        self._next()
        if not self._template_args_and_scopes():
            return None
        while self._is('const'):
            self._next()
        return self.pos - 1

    def _template_args_and_scopes(self) -> bool:
        while True:
            if self._is('<') and not self._scan_template_args():
                return False
            if not self._is('::'):
                return True
            self._next()
            if not (self._peek() is not None and self._peek().kind is TokenKind.IDENT):  # type: ignore[union-attr]
                return False
            self._next()

    def _scan_template_args(self) -> bool:
        self._next()
        depth = 1
        parens = 0
        while depth > 0:
            token = self._peek()
            if token is None:
                return False
            if token.kind in (TokenKind.IDENT, TokenKind.INT, TokenKind.FLOAT) or token.value == ',':
                self._next()
                continue
            if token.value in {'(', ')'}:
                parens += 1 if token.value == '(' else -1
                if parens < 0:
                    return False
                self._next()
                continue
            if token.kind is TokenKind.OP and token.value in TEMPLATE_ARG_OPS:
                if not parens:
                    depth += {'<': 1, '>': -1, '>>': -2}.get(token.value, 0)
                self._next()
                continue
            return False
        return depth == 0

    # ------------------------------------------------------------------
    # functions and declarations
    # ------------------------------------------------------------------

    def _function_def(self, type_info: _TypeInfo) -> AstNode:
        name = self._expect_ident()
        params = self._param_list()
        if self._is(';'):
            raise UnsupportedConstruct(self._peek().span, 'function prototype')  # type: ignore[union-attr]
        body = self._compound()
        return_type = AstNode(NodeKind.TYPE_NAME, type_info.span, type_text=type_info.text)
        return AstNode(
            NodeKind.FUNCTION_DEF,
            type_info.span.merge(body.span),
            name=name.value,
            type_text=type_info.text,
            children=(return_type, params, body),
        )

    def _param_list(self) -> AstNode:
        open_paren = self._expect('(')
        params: list[AstNode] = []
        if self._is('void') and self._is(')', 1):
            self._next()
        while not self._is(')'):
            if params:
                self._expect(',')
            params.append(self._param())
        self._expect(')')
        return AstNode(NodeKind.PARAM_LIST, self._span_from(open_paren.span), children=tuple(params))

    def _param(self) -> AstNode:
        type_info = self._parse_type()
        if type_info is None:
            self._fail({'<parameter type>'})
        name = self._next().value if self._is_ident() else None
        type_name = self._type_name(type_info, self._dims())
        return AstNode(
            NodeKind.PARAM,
            self._span_from(type_info.span),
            name=name,
            type_text=type_info.text,
            children=(type_name,),
        )

    def _dims(self) -> list[AstNode]:
        dims: list[AstNode] = []
        while self._is('['):
            bracket = self._next()
            if self._is(']'):
                raise UnsupportedConstruct(bracket.span, 'unsized array')
            dims.append(self._expression())
            self._expect(']')
        return dims

    def _type_name(self, type_info: _TypeInfo, dims: list[AstNode]) -> AstNode:
        span = type_info.span
        if dims:
            span = self._span_from(span)
        return AstNode(NodeKind.TYPE_NAME, span, type_text=type_info.text, children=tuple(dims))

    def _declarators(self, type_info: _TypeInfo, start: SourceSpan, terminator: str) -> list[AstNode]:
        """Parse ``name [dims] [= init] {, ...}`` and the terminator."""
        declarations: list[AstNode] = []
        while True:
            name = self._expect_ident()
            if self._is('('):
                span = self._peek().span  # type: ignore[union-attr]
                raise UnsupportedConstruct(span, 'constructor-style initializer')
            type_name = self._type_name(type_info, self._dims())
            children = [type_name]
            if self._is('='):
                self._next()
                children.append(self._brace_literal() if self._is('{') else self._expression())
            if self._is(':'):
                span = self._peek().span  # type: ignore[union-attr]
                raise UnsupportedConstruct(span, 'range-based for or bit-field')
            declarations.append(
                AstNode(
                    NodeKind.DECLARATION,
                    self._span_from(start),
                    name=name.value,
                    type_text=type_info.text,
                    children=tuple(children),
                ),
            )
            if not self._is(','):
                break
            self._next()
        if terminator:
            self._expect(terminator)
        return declarations

    def _brace_literal(self) -> AstNode:
        open_brace = self._next()
        first = self.pos - 1
        depth = 1
        while depth:
            token = self._next()
            if token.value == '{':
                depth += 1
            elif token.value == '}':
                depth -= 1
        text = self._join(first, self.pos - 1)
        return AstNode(NodeKind.LITERAL, self._span_from(open_brace.span), name=text, text=text)

    # ------------------------------------------------------------------
    # statements
    # ------------------------------------------------------------------

    def _compound(self) -> AstNode:
        open_brace = self._expect('{')
        items = self._block_items(stop=frozenset({'}'}))
        self._expect('}')
        return AstNode(NodeKind.COMPOUND_STMT, self._span_from(open_brace.span), children=tuple(items))

    def _block_items(self, stop: frozenset[str]) -> list[AstNode]:
        items: list[AstNode] = []
        while True:
            token = self._raw()
            if token is None:
                self._fail(set(stop))
            if token.kind is TokenKind.COMMENT:
                items.append(self._comment())
            elif token.kind is TokenKind.DIRECTIVE:
                items.append(self._directive())
            elif token.value in stop and token.kind is not TokenKind.STRING:
                return items
            else:
                items.extend(self._statement_items())

    def _statement(self) -> AstNode:
        """A statement in a position that admits exactly one (branches, loop bodies)."""
        token = self._peek()
        items = self._statement_items()
        if len(items) != 1:
            span = token.span if token else self._eof_span()
            raise UnsupportedConstruct(span, 'multiple declarators outside a block')
        return items[0]

    def _statement_items(self) -> list[AstNode]:
        token = self._peek()
        if token is None:
            self._fail({'<statement>'})
        with self._nested(token.span):
            return self._statement_at(token)

    def _statement_at(self, token: Token) -> list[AstNode]:  # noqa: C901, PLR0911 - one branch per statement keyword
        value = token.value
        if token.kind is TokenKind.DIRECTIVE:
            return [self._pragma_body(token)]
        if value == '{':
            return [self._compound()]
        if value == ';':
            self._next()
            return [AstNode(NodeKind.EXPR_STMT, token.span)]
        if token.kind is TokenKind.IDENT and value in UNSUPPORTED_KEYWORDS:
            raise UnsupportedConstruct(token.span, value)
        handler = {
            'if': self._if,
            'for': self._for,
            'while': self._while,
            'switch': self._switch,
            'return': self._return,
            'break': self._jump,
            'continue': self._jump,
        }.get(value) if token.kind is TokenKind.IDENT else None
        if handler is not None:
            return [handler()]
        if self._is_ident() and self._is(':', 1):
            raise UnsupportedConstruct(token.span, 'label')
        type_info = self._declaration_type()
        if type_info is not None:
            return self._declarators(type_info, token.span, terminator=';')
        expr = self._expression()
        self._expect(';')
        return [AstNode(NodeKind.EXPR_STMT, self._span_from(token.span), children=(expr,))]

    def _pragma_body(self, first: Token) -> AstNode:
        """Pragmas heading an unbraced body share an implicit block with the statement after them."""
        items: list[AstNode] = []
        while (token := self._peek()) is not None and token.kind is TokenKind.DIRECTIVE:
            self.pos = self._index()  # type: ignore[assignment]
            directive = self._directive()
            if directive.kind is not NodeKind.PRAGMA:
                raise UnsupportedConstruct(token.span, 'directive outside a block')
            items.append(directive)
        items.append(self._statement())
        return AstNode(NodeKind.COMPOUND_STMT, self._span_from(first.span), children=tuple(items))

    def _declaration_type(self) -> _TypeInfo | None:
        """Type of a declaration starting here, or None (cursor unchanged)."""
        save = self.pos
        type_info = self._parse_type()
        if type_info is not None and self._is_ident():
            return type_info
        self.pos = save
        return None

    def _if(self) -> AstNode:
        keyword = self._next()
        self._expect('(')
        condition = self._expression()
        self._expect(')')
        children = [condition, self._statement()]
        if self._is('else'):
            self._next()
            children.append(self._statement())
        return AstNode(NodeKind.IF_STMT, self._span_from(keyword.span), children=tuple(children))

    def _for(self) -> AstNode:
        keyword = self._next()
        self._expect('(')
        init = self._for_init()
        condition = self._for_clause(';')
        step = self._for_clause(')')
        body = self._statement()
        return AstNode(
            NodeKind.FOR_STMT,
            self._span_from(keyword.span),
            children=(init, condition, step, body),
        )

    def _for_init(self) -> AstNode:
        start = self._peek()
        type_info = self._declaration_type()
        if start is not None and type_info is not None:
            declarations = self._declarators(type_info, start.span, terminator=';')
            if len(declarations) != 1:
                raise UnsupportedConstruct(start.span, 'multiple declarators in for header')
            return declarations[0]
        return self._for_clause(';')

    def _for_clause(self, terminator: str) -> AstNode:
        end = self._peek()
        if self._is(terminator):
            self._next()
            return AstNode(NodeKind.EXPR_STMT, end.span)  # type: ignore[union-attr]
        expr = self._expression()
        self._expect(terminator)
        return AstNode(NodeKind.EXPR_STMT, expr.span, children=(expr,))

    def _while(self) -> AstNode:
        keyword = self._next()
        self._expect('(')
        condition = self._expression()
        self._expect(')')
        body = self._statement()
        return AstNode(NodeKind.WHILE_STMT, self._span_from(keyword.span), children=(condition, body))

    def _switch(self) -> AstNode:
        keyword = self._next()
        self._expect('(')
        selector = self._expression()
        self._expect(')')
        self._expect('{')
        prefix = self._block_prefix()
        clauses: list[AstNode] = []
        while not self._is('}'):
            clauses.append(self._case_clause())
        self._expect('}')
        if clauses and prefix:
            first = clauses[0]
            clauses[0] = replace(first, span=prefix[0].span.merge(first.span), children=(*prefix, *first.children))
            prefix = []
        children = (selector, *prefix, *clauses)
        return AstNode(NodeKind.SWITCH_STMT, self._span_from(keyword.span), children=children)

    def _block_prefix(self) -> list[AstNode]:
        """Comments and pragmas between ``switch {`` and the first label; they open the first clause."""
        items: list[AstNode] = []
        while (token := self._raw()) is not None and token.kind in (TokenKind.COMMENT, TokenKind.DIRECTIVE):
            items.append(self._comment() if token.kind is TokenKind.COMMENT else self._directive())
        return items

    def _case_clause(self) -> AstNode:
        keyword = self._expect('case', 'default')
        label: str | None = None
        if keyword.value == 'case':
            label = expression_text(self._binary(0))
        self._expect(':')
        body = self._block_items(stop=frozenset({'case', 'default', '}'}))
        return AstNode(NodeKind.CASE_CLAUSE, self._span_from(keyword.span), name=label, children=tuple(body))

    def _return(self) -> AstNode:
        keyword = self._next()
        children: tuple[AstNode, ...] = ()
        if not self._is(';'):
            children = (self._expression(),)
        self._expect(';')
        return AstNode(NodeKind.RETURN_STMT, self._span_from(keyword.span), children=children)

    def _jump(self) -> AstNode:
        keyword = self._next()
        self._expect(';')
        kind = NodeKind.BREAK_STMT if keyword.value == 'break' else NodeKind.CONTINUE_STMT
        return AstNode(kind, self._span_from(keyword.span))

    # ------------------------------------------------------------------
    # expressions
    # ------------------------------------------------------------------

    def _expression(self) -> AstNode:
        token = self._peek()
        with self._nested(token.span if token else self._eof_span()):
            return self._assignment()

    def _assignment(self) -> AstNode:
        target = self._binary(0)
        if self._is('?'):
            raise UnsupportedConstruct(self._peek().span, 'conditional operator')  # type: ignore[union-attr]
        token = self._peek()
        if token is not None and token.kind is TokenKind.OP and token.value in ASSIGN_OPS:
            self._next()
            value = self._expression()
            return _expr(NodeKind.ASSIGNMENT, target.span.merge(value.span), op=token.value, children=(target, value))
        return target

    def _binary(self, min_precedence: int) -> AstNode:
        left = self._unary()
        while True:
            token = self._peek()
            if token is None or token.kind is not TokenKind.OP:
                return left
            precedence = BINARY_PRECEDENCE.get(token.value)
            if precedence is None or precedence <= min_precedence:
                return left
            self._next()
            right = self._binary(precedence)
            left = _expr(NodeKind.BINARY_EXPR, left.span.merge(right.span), op=token.value, children=(left, right))

    def _unary(self) -> AstNode:
        token = self._peek()
        if token is not None and token.kind is TokenKind.OP and token.value in PREFIX_OPS:
            self._next()
            with self._nested(token.span):
                operand = self._unary()
            return _expr(NodeKind.UNARY_EXPR, token.span.merge(operand.span), op=token.value, children=(operand,))
        return self._postfix(self._primary())

    def _postfix(self, node: AstNode) -> AstNode:
        while (token := self._peek()) is not None:
            if token.value == '[':
                self._next()
                index = self._expression()
                self._expect(']')
                node = _expr(NodeKind.ARRAY_SUBSCRIPT, self._span_from(node.span), children=(node, index))
            elif token.value == '(' and token.kind is TokenKind.PUNCT:
                node = self._call(node)
            elif token.value in {'++', '--'}:
                self._next()
                node = _expr(
                    NodeKind.UNARY_EXPR,
                    self._span_from(node.span),
                    op=token.value,
                    postfix=True,
                    children=(node,),
                )
            elif token.value in {'.', '->'}:
                node = self._member(node, token)
            else:
                return node
        return node

    def _call(self, callee: AstNode) -> AstNode:
        self._next()
        args: list[AstNode] = []
        while not self._is(')'):
            if args:
                self._expect(',')
            args.append(self._expression())
        self._expect(')')
        return _expr(NodeKind.CALL_EXPR, self._span_from(callee.span), children=(callee, *args))

    def _member(self, base: AstNode, operator: Token) -> AstNode:
        # member access folds into a dotted identifier; the subset has no member node
        if base.kind is not NodeKind.IDENTIFIER or base.parenthesized:
            raise UnsupportedConstruct(operator.span, 'member access on an expression')
        self._next()
        member = self._expect_ident()
        dotted = f'{base.name}{operator.value}{member.value}'
        return _expr(NodeKind.IDENTIFIER, self._span_from(base.span), name=dotted)

    def _primary(self) -> AstNode:
        token = self._peek()
        if token is None:
            self._fail({'<expression>'})
        if token.value == '(' and token.kind is TokenKind.PUNCT:
            return self._parenthesized(token)
        if token.kind in (TokenKind.INT, TokenKind.FLOAT, TokenKind.CHAR, TokenKind.STRING):
            self._next()
            return _expr(NodeKind.LITERAL, token.span, name=token.value)
        if token.kind is TokenKind.IDENT and token.value in {'true', 'false'}:
            self._next()
            return _expr(NodeKind.LITERAL, token.span, name=token.value)
        if token.kind is TokenKind.IDENT and token.value in BUILTIN_WORDS and self._is('(', 1):
            raise UnsupportedConstruct(token.span, 'functional cast')
        if self._is_ident():
            node = self._scoped_identifier()
            if self._is('<') and self._template_call_ahead():
                raise UnsupportedConstruct(node.span, 'functional cast or template call')
            return node
        self._fail({'<expression>'})
        raise AssertionError  # pragma: no cover - _fail always raises

    def _template_call_ahead(self) -> bool:
        """``name<args>(`` ahead; ``a < b`` comparisons do not match. Cursor unchanged."""
        save, last = self.pos, self._last
        following = self._peek() if self._scan_template_args() else None
        self.pos, self._last = save, last
        return following is not None and following.value in TEMPLATE_FOLLOWERS

    def _parenthesized(self, open_paren: Token) -> AstNode:
        following = self._peek(1)
        if following is not None and following.value in BUILTIN_WORDS | QUALIFIERS:
            raise UnsupportedConstruct(open_paren.span, 'cast')
        self._next()
        inner = self._expression()
        self._expect(')')
        node = replace(inner, span=self._span_from(open_paren.span), parenthesized=True)
        return replace(node, text=expression_text(node))

    def _scoped_identifier(self) -> AstNode:
        first = self._next()
        name = first.value
        while self._is('::'):
            following = self._peek(1)
            if following is None or following.kind is not TokenKind.IDENT:
                break
            self._next()
            name += '::' + self._next().value
        return _expr(NodeKind.IDENTIFIER, self._span_from(first.span), name=name)


def _expr(kind: NodeKind, span: SourceSpan, **fields: object) -> AstNode:
    node = AstNode(kind, span, **fields)  # type: ignore[arg-type]
    return replace(node, text=expression_text(node))


def _end_position(text: str) -> tuple[int, int]:
    return (text.count('\n') + 1, len(text) - text.rfind('\n'))


def parse_text(text: str) -> AstNode:
    """Parse HLS-C text into a numbered TranslationUnit tree."""
    return number_tree(Parser(text).parse_translation_unit())


def parse(src: SourceFile) -> AstNode:
    """Parse a source file into a TranslationUnit tree.

    Raises:
        LexError: the text does not tokenize.
        HlscSyntaxError: a token does not fit the grammar.
        UnsupportedConstruct: valid C/C++ outside the supported subset.
    """
    tree = parse_text(src.text)
    logger.debug('parsed_source', source=src.id, nodes=tree.size())
    return tree
