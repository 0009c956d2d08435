"""Render syntax trees back to HLS-C source.

``pretty_print`` output reparses to a structurally equal tree: every
directive and comment sits on its own line and blocks are re-indented.
"""

from __future__ import annotations

from astkit.hlsc.nodes import EXPRESSION_KINDS, AstNode, NodeKind

INDENT = '    '


def expression_text(node: AstNode) -> str:
    """Canonical surface text of an expression node."""
    text = _bare_expression(node)
    return f'({text})' if node.parenthesized else text


def _child_text(node: AstNode) -> str:
    return node.text if node.text is not None else expression_text(node)


def _bare_expression(node: AstNode) -> str:
    kind = node.kind
    if kind in (NodeKind.IDENTIFIER, NodeKind.LITERAL):
        return node.name or ''
    if kind in (NodeKind.BINARY_EXPR, NodeKind.ASSIGNMENT):
        left, right = node.children
        return f'{_child_text(left)} {node.op} {_child_text(right)}'
    if kind is NodeKind.UNARY_EXPR:
        operand = _child_text(node.children[0])
        if node.postfix:
            return f'{operand}{node.op}'
        # keep "- -x" from lexing as a decrement
        separator = ' ' if node.op and operand.startswith(node.op[-1]) else ''
        return f'{node.op}{separator}{operand}'
    if kind is NodeKind.CALL_EXPR:
        callee, *args = node.children
        return f'{_child_text(callee)}({", ".join(_child_text(a) for a in args)})'
    if kind is NodeKind.ARRAY_SUBSCRIPT:
        base, index = node.children
        return f'{_child_text(base)}[{_child_text(index)}]'
    msg = f'{kind.value} is not an expression'
    raise ValueError(msg)


def _dims(type_name: AstNode | None) -> str:
    if type_name is None:
        return ''
    return ''.join(f'[{_child_text(dim)}]' for dim in type_name.children)


def _declaration_text(node: AstNode) -> str:
    """Declaration without the trailing semicolon."""
    type_name = node.child_of_kind(NodeKind.TYPE_NAME)
    text = f'{node.type_text} {node.name}{_dims(type_name)}'
    rest = [c for c in node.children if c.kind is not NodeKind.TYPE_NAME]
    if rest:
        text += f' = {_child_text(rest[0])}'
    return text


def _header_clause(node: AstNode) -> str:
    if node.kind is NodeKind.DECLARATION:
        return _declaration_text(node)
    if node.kind in EXPRESSION_KINDS:
        return _child_text(node)
    return _child_text(node.children[0]) if node.children else ''


def for_header(node: AstNode) -> str:
    """``init; cond; step`` of a ForStmt, with empty clauses collapsed as in ``;;``."""
    init, condition, step = node.children[:3]
    header = _header_clause(init) + ';'
    condition_text = _header_clause(condition)
    header += f' {condition_text};' if condition_text else ';'
    step_text = _header_clause(step)
    return header + (f' {step_text}' if step_text else '')


def _param_text(node: AstNode) -> str:
    dims = _dims(node.child_of_kind(NodeKind.TYPE_NAME))
    return f'{node.type_text} {node.name}{dims}' if node.name else f'{node.type_text}{dims}'


def _block(items: tuple[AstNode, ...] | list[AstNode], depth: int) -> str:
    if not items:
        return '{}'
    inner = ''.join(f'{INDENT * (depth + 1)}{_statement(item, depth + 1)}\n' for item in items)
    return f'{{\n{inner}{INDENT * depth}}}'


def _statement(node: AstNode, depth: int) -> str:  # noqa: C901, PLR0911, PLR0912 - one branch per kind
    """Render a statement; the first line carries no indentation."""
    kind = node.kind
    if kind is NodeKind.COMMENT:
        return node.name or ''
    if kind is NodeKind.PRAGMA:
        return f'#pragma {node.name}'
    if kind is NodeKind.INCLUDE:
        return f'#include {node.name}'
    if kind is NodeKind.COMPOUND_STMT:
        return _block(node.children, depth)
    if kind is NodeKind.DECLARATION:
        return _declaration_text(node) + ';'
    if kind is NodeKind.EXPR_STMT or kind in EXPRESSION_KINDS:
        return _header_clause(node) + ';'
    if kind is NodeKind.RETURN_STMT:
        return f'return {_child_text(node.children[0])};' if node.children else 'return;'
    if kind is NodeKind.BREAK_STMT:
        return 'break;'
    if kind is NodeKind.CONTINUE_STMT:
        return 'continue;'
    if kind is NodeKind.IF_STMT:
        condition, then, *rest = node.children
        text = f'if ({_child_text(condition)}) {_statement(then, depth)}'
        if rest:
            joiner = ' ' if then.kind is NodeKind.COMPOUND_STMT else f'\n{INDENT * depth}'
            text += f'{joiner}else {_statement(rest[0], depth)}'
        return text
    if kind is NodeKind.FOR_STMT:
        return f'for ({for_header(node)}) {_statement(node.children[-1], depth)}'
    if kind is NodeKind.WHILE_STMT:
        condition, body = node.children
        return f'while ({_child_text(condition)}) {_statement(body, depth)}'
    if kind is NodeKind.SWITCH_STMT:
        return _switch(node, depth)
    if kind is NodeKind.FUNCTION_DEF:
        params = node.child_of_kind(NodeKind.PARAM_LIST)
        body = node.child_of_kind(NodeKind.COMPOUND_STMT)
        param_text = ', '.join(_param_text(p) for p in params.children) if params else ''
        return f'{node.type_text} {node.name}({param_text}) {_block(body.children if body else (), depth)}'
    msg = f'{kind.value} is not a statement'
    raise ValueError(msg)


def _switch(node: AstNode, depth: int) -> str:
    selector, *items = node.children
    lines = [f'switch ({_child_text(selector)}) {{']
    for item in items:
        if item.kind is not NodeKind.CASE_CLAUSE:
            lines.append(f'{INDENT * (depth + 1)}{_statement(item, depth + 1)}')
            continue
        label = f'case {item.name}:' if item.name is not None else 'default:'
        lines.append(f'{INDENT * (depth + 1)}{label}')
        lines.extend(f'{INDENT * (depth + 2)}{_statement(child, depth + 2)}' for child in item.children)
    lines.append(f'{INDENT * depth}}}')
    return '\n'.join(lines)


def pretty_print(node: AstNode) -> str:
    """Render *node* (a TranslationUnit, statement or expression) as source text."""
    if node.kind is NodeKind.TRANSLATION_UNIT:
        if not node.children:
            return ''
        return '\n'.join(_statement(item, 0) for item in node.children) + '\n'
    if node.kind in EXPRESSION_KINDS:
        return expression_text(node)
    return _statement(node, 0)
