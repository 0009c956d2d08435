"""Line-based AST text used as model input.

One tag line per statement, emitted in pre-order::

    FuncName: top_module, Params: ap_uint<11>, ap_uint<8>, bool, bool
    VarTyp: ap_uint<8>
    Asgnmnt: v_rdy = v_en
    IfStmt: Contn: (v_en)
    Then:
    Asgnmnt: v_data = rom[v_addr]

Nesting is carried by line order only unless ``indent`` is requested.
Pragmas, includes, comments, ``break`` and ``continue`` produce no lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from astkit.exceptions import NotAFunction
from astkit.hlsc.nodes import EXPRESSION_KINDS, AstNode, NodeKind, function_body
from astkit.hlsc.printer import expression_text, for_header

_LEADING_QUALIFIERS = re.compile(r'^(?:(?:static|const|volatile|extern|inline|register|constexpr)\s+)+')

SILENT_KINDS = frozenset(
    {NodeKind.PRAGMA, NodeKind.INCLUDE, NodeKind.COMMENT, NodeKind.BREAK_STMT, NodeKind.CONTINUE_STMT},
)


@dataclass(frozen=True)
class SerializedAst:
    text: str
    line_count: int

    def lines(self) -> list[str]:
        return self.text.split('\n') if self.text else []


def param_type(type_text: str) -> str:
    """Parameter type with reference markers dropped (``ap_uint<8>&`` -> ``ap_uint<8>``)."""
    return type_text.rstrip('&').rstrip()


def variable_type(type_text: str) -> str:
    """Declaration type without storage or cv qualifiers in front."""
    return _LEADING_QUALIFIERS.sub('', type_text)


def _text(node: AstNode) -> str:
    return node.text if node.text is not None else expression_text(node)


class _Writer:
    def __init__(self, *, indent: bool) -> None:
        self.indent = indent
        self.lines: list[str] = []

    def emit(self, depth: int, line: str) -> None:
        prefix = '  ' * depth if self.indent else ''
        self.lines.append(f'{prefix}{line}'.rstrip())

    def statement(self, node: AstNode, depth: int) -> None:  # noqa: C901, PLR0912 - one branch per tag
        kind = node.kind
        if kind in SILENT_KINDS:
            return
        if kind is NodeKind.COMPOUND_STMT:
            for child in node.children:
                self.statement(child, depth)
        elif kind is NodeKind.EXPR_STMT:
            if node.children:
                self.statement(node.children[0], depth)
        elif kind is NodeKind.DECLARATION:
            self.emit(depth, f'VarTyp: {variable_type(node.type_text or "")}')
        elif kind is NodeKind.ASSIGNMENT:
            self.emit(depth, f'Asgnmnt: {_text(node)}')
        elif kind is NodeKind.CALL_EXPR:
            self.emit(depth, f'CallStmt: {_text(node)}')
        elif kind in EXPRESSION_KINDS:
            self.emit(depth, f'Expr: {_text(node)}')
        elif kind is NodeKind.IF_STMT:
            self.emit(depth, f'IfStmt: Contn: ({_text(node.children[0])})')
            self.branch(depth, 'Then:', node.children[1])
            if len(node.children) > 2:  # noqa: PLR2004 - condition, then, else
                self.branch(depth, 'Else:', node.children[2])
        elif kind is NodeKind.FOR_STMT:
            self.emit(depth, f'ForStmt: Contn: ({for_header(node)})')
            self.branch(depth, 'Body:', node.children[-1])
        elif kind is NodeKind.WHILE_STMT:
            self.emit(depth, f'WhileStmt: Contn: ({_text(node.children[0])})')
            self.branch(depth, 'Body:', node.children[1])
        elif kind is NodeKind.SWITCH_STMT:
            self.emit(depth, f'SwitchStmt: Contn: ({_text(node.children[0])})')
            for clause in node.children[1:]:
                if clause.kind is NodeKind.CASE_CLAUSE:
                    self.branch(depth, f'Case {clause.name if clause.name is not None else "default"}:', clause)
        elif kind is NodeKind.CASE_CLAUSE:
            for child in node.children:
                self.statement(child, depth)
        elif kind is NodeKind.RETURN_STMT:
            self.emit(depth, f'RetStmt: {_text(node.children[0])}' if node.children else 'RetStmt:')

    def branch(self, depth: int, label: str, body: AstNode) -> None:
        self.emit(depth, label)
        self.statement(body, depth + 1)


def serialize(t: AstNode, *, indent: bool = False) -> SerializedAst:
    """Render a FunctionDef subtree as tag lines.

    Raises:
        NotAFunction: *t* is not a FunctionDef.
    """
    if t.kind is not NodeKind.FUNCTION_DEF:
        msg = f'expected a FunctionDef, got {t.kind.value}'
        raise NotAFunction(msg)
    writer = _Writer(indent=indent)
    params = t.child_of_kind(NodeKind.PARAM_LIST)
    types = ', '.join(param_type(p.type_text or '') for p in (params.children if params else ()))
    writer.emit(0, f'FuncName: {t.name}, Params: {types}')
    body = function_body(t)
    if body is not None:
        writer.statement(body, 0)
    return SerializedAst(text='\n'.join(writer.lines), line_count=len(writer.lines))
