"""Syntax tree types for the HLS-C subset.

Trees are immutable: every transformation returns new nodes built with
:func:`dataclasses.replace`. Node ids are assigned in pre-order once a tree
is complete (see :func:`number_tree`) so two parses of the same text yield
identical ids.
"""

from __future__ import annotations

import hashlib
from collections.abc import Iterator
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any

from astkit.utils import read_text_utf8


class NodeKind(str, Enum):
    """Kinds of syntax tree nodes."""

    TRANSLATION_UNIT = 'TranslationUnit'
    INCLUDE = 'Include'
    PRAGMA = 'Pragma'
    FUNCTION_DEF = 'FunctionDef'
    PARAM_LIST = 'ParamList'
    PARAM = 'Param'
    TYPE_NAME = 'TypeName'
    COMPOUND_STMT = 'CompoundStmt'
    DECLARATION = 'Declaration'
    ASSIGNMENT = 'Assignment'
    IF_STMT = 'IfStmt'
    FOR_STMT = 'ForStmt'
    WHILE_STMT = 'WhileStmt'
    SWITCH_STMT = 'SwitchStmt'
    CASE_CLAUSE = 'CaseClause'
    RETURN_STMT = 'ReturnStmt'
    BREAK_STMT = 'BreakStmt'
    CONTINUE_STMT = 'ContinueStmt'
    EXPR_STMT = 'ExprStmt'
    CALL_EXPR = 'CallExpr'
    BINARY_EXPR = 'BinaryExpr'
    UNARY_EXPR = 'UnaryExpr'
    ARRAY_SUBSCRIPT = 'ArraySubscript'
    IDENTIFIER = 'Identifier'
    LITERAL = 'Literal'
    COMMENT = 'Comment'


# Kinds carrying control or data semantics. Optimization never removes them.
SEMANTIC_KINDS = frozenset(
    {
        NodeKind.FUNCTION_DEF,
        NodeKind.IF_STMT,
        NodeKind.FOR_STMT,
        NodeKind.WHILE_STMT,
        NodeKind.SWITCH_STMT,
        NodeKind.RETURN_STMT,
        NodeKind.ASSIGNMENT,
        NodeKind.DECLARATION,
        NodeKind.CALL_EXPR,
    },
)

EXPRESSION_KINDS = frozenset(
    {
        NodeKind.ASSIGNMENT,
        NodeKind.CALL_EXPR,
        NodeKind.BINARY_EXPR,
        NodeKind.UNARY_EXPR,
        NodeKind.ARRAY_SUBSCRIPT,
        NodeKind.IDENTIFIER,
        NodeKind.LITERAL,
    },
)


@dataclass(frozen=True, order=True)
class SourceSpan:
    """1-based source region; ``end`` points just past the last character."""

    start_line: int = 1
    start_col: int = 1
    end_line: int = 1
    end_col: int = 1

    @property
    def start(self) -> tuple[int, int]:
        return (self.start_line, self.start_col)

    @property
    def end(self) -> tuple[int, int]:
        return (self.end_line, self.end_col)

    def contains(self, other: SourceSpan) -> bool:
        """Return True when *other* lies within this span."""
        return self.start <= other.start and other.end <= self.end

    def merge(self, other: SourceSpan) -> SourceSpan:
        """Smallest span covering both spans."""
        start = min(self.start, other.start)
        end = max(self.end, other.end)
        return SourceSpan(start[0], start[1], end[0], end[1])

    def to_dict(self) -> dict[str, int]:
        return {
            'start_line': self.start_line,
            'start_col': self.start_col,
            'end_line': self.end_line,
            'end_col': self.end_col,
        }

    def __str__(self) -> str:
        return f'{self.start_line}:{self.start_col}-{self.end_line}:{self.end_col}'


@dataclass(frozen=True)
class SourceFile:
    """One HLS-C source file of a corpus."""

    path: Path
    text: str
    id: str

    @classmethod
    def from_path(cls, path: Path, *, root: Path | None = None) -> SourceFile:
        """Load *path*; the id is its POSIX path relative to *root* (or its name)."""
        text = read_text_utf8(path)
        source_id = path.relative_to(root).as_posix() if root is not None else path.name
        return cls(path=path, text=text, id=source_id)

    @classmethod
    def from_text(cls, text: str, *, name: str = '<memory>') -> SourceFile:
        """Wrap in-memory text; the id is derived from a content digest."""
        digest = hashlib.sha256(text.encode('utf-8')).hexdigest()[:12]
        return cls(path=Path(name), text=text, id=f'{name}:{digest}')


@dataclass(frozen=True)
class AstNode:
    """Typed syntax tree node.

    ``name`` holds function, parameter, variable and identifier names, the
    lexeme of literals, the directive body of pragmas/includes and the raw
    text of comments. ``op`` holds the operator of assignment, binary and
    unary expressions. ``text`` is the canonical surface text of expression
    nodes and is not part of structural identity.
    """

    kind: NodeKind
    span: SourceSpan = field(default_factory=SourceSpan)
    name: str | None = None
    type_text: str | None = None
    op: str | None = None
    postfix: bool = False
    parenthesized: bool = False
    children: tuple[AstNode, ...] = ()
    node_id: int = -1
    text: str | None = field(default=None, compare=False)

    def walk(self) -> Iterator[AstNode]:
        """Yield this node and all descendants in pre-order."""
        stack: list[AstNode] = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def shape(self) -> tuple[Any, ...]:
        """Structural identity: everything except spans, ids and surface text."""
        return (
            self.kind.value,
            self.name,
            self.type_text,
            self.op,
            self.postfix,
            self.parenthesized,
            tuple(child.shape() for child in self.children),
        )

    def structurally_equal(self, other: AstNode) -> bool:
        return self.shape() == other.shape()

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def child_of_kind(self, kind: NodeKind) -> AstNode | None:
        """Return the first direct child of *kind*, if any."""
        return next((c for c in self.children if c.kind is kind), None)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dump (kind/name/type_text/op/children/span/node_id)."""
        data: dict[str, Any] = {'kind': self.kind.value, 'node_id': self.node_id}
        if self.name is not None:
            data['name'] = self.name
        if self.type_text is not None:
            data['type_text'] = self.type_text
        if self.op is not None:
            data['op'] = self.op
        if self.postfix:
            data['postfix'] = True
        if self.parenthesized:
            data['parenthesized'] = True
        data['span'] = self.span.to_dict()
        data['children'] = [child.to_dict() for child in self.children]
        return data


def number_tree(root: AstNode, start: int = 0) -> AstNode:
    """Return a copy of *root* with node ids assigned in pre-order."""
    counter = start

    def _visit(node: AstNode) -> AstNode:
        nonlocal counter
        node_id = counter
        counter += 1
        children = tuple(_visit(child) for child in node.children)
        return replace(node, node_id=node_id, children=children)

    return _visit(root)


def declaration_initializer(node: AstNode) -> AstNode | None:
    """Initializer expression of a Declaration (the child after its TypeName)."""
    rest = [c for c in node.children if c.kind is not NodeKind.TYPE_NAME]
    return rest[0] if rest else None


def function_body(node: AstNode) -> AstNode | None:
    return node.child_of_kind(NodeKind.COMPOUND_STMT)
