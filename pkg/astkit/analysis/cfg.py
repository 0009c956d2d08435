"""Control-flow edges derived node by node from an optimized tree.

Each node kind has a fixed handler producing its outgoing (and, for loops,
incoming back) edges; the graph is the union of all handler results. No
sequential fall-through edges are added between sibling statements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any

from hotlog import get_logger

from astkit.hlsc.nodes import AstNode, NodeKind, declaration_initializer, function_body

logger = get_logger(__name__)


class EdgeKind(str, Enum):
    THEN = 'then'
    ELSE = 'else'
    LOOP_BODY = 'loop_body'
    LOOP_BACK = 'loop_back'
    CASE = 'case'
    FUNC_BODY = 'func_body'
    RETURN_FLOW = 'return_flow'
    EXPR = 'expr'
    DECL = 'decl'
    ASSIGN = 'assign'
    CALL = 'call'


@dataclass(frozen=True)
class CfgEdge:
    source: int
    target: int
    kind: EdgeKind

    def to_dict(self) -> dict[str, Any]:
        return {'from': self.source, 'to': self.target, 'kind': self.kind.value}


@dataclass(frozen=True)
class Cfg:
    nodes: frozenset[int]
    edges: tuple[CfgEdge, ...]

    def edges_of_kind(self, kind: EdgeKind) -> list[CfgEdge]:
        return [e for e in self.edges if e.kind is kind]

    def to_dict(self) -> dict[str, Any]:
        return {'nodes': sorted(self.nodes), 'edges': [e.to_dict() for e in self.edges]}


def _edge(source: AstNode, target: AstNode, kind: EdgeKind) -> CfgEdge:
    return CfgEdge(source.node_id, target.node_id, kind)


def _loop(node: AstNode, body: AstNode) -> list[CfgEdge]:
    return [_edge(node, body, EdgeKind.LOOP_BODY), _edge(body, node, EdgeKind.LOOP_BACK)]


def handlers(n: AstNode) -> list[CfgEdge]:  # noqa: PLR0911 - one case per handled kind
    """Edges contributed by a single node; empty for unhandled kinds."""
    kind = n.kind
    if kind is NodeKind.IF_STMT:
        edges = [_edge(n, n.children[1], EdgeKind.THEN)]
        if len(n.children) > 2:  # noqa: PLR2004 - condition, then, else
            edges.append(_edge(n, n.children[2], EdgeKind.ELSE))
        return edges
    if kind in (NodeKind.FOR_STMT, NodeKind.WHILE_STMT):
        return _loop(n, n.children[-1])
    if kind is NodeKind.SWITCH_STMT:
        return [_edge(n, c, EdgeKind.CASE) for c in n.children if c.kind is NodeKind.CASE_CLAUSE]
    if kind is NodeKind.FUNCTION_DEF:
        body = function_body(n)
        return [_edge(n, body, EdgeKind.FUNC_BODY)] if body is not None else []
    if kind is NodeKind.RETURN_STMT:
        return [_edge(n, n.children[0], EdgeKind.RETURN_FLOW)] if n.children else []
    if kind is NodeKind.EXPR_STMT:
        return [_edge(n, n.children[0], EdgeKind.EXPR)] if n.children else []
    if kind is NodeKind.DECLARATION:
        init = declaration_initializer(n)
        return [_edge(n, init, EdgeKind.DECL)] if init is not None else []
    if kind is NodeKind.ASSIGNMENT:
        return [_edge(n, n.children[1], EdgeKind.ASSIGN)]
    if kind is NodeKind.CALL_EXPR:
        return [_edge(n, n.children[0], EdgeKind.CALL)]
    return []


def analyze_control_flow(t: AstNode) -> Cfg:
    """Union of :func:`handlers` over every node of *t*, in pre-order."""
    nodes: set[int] = set()
    edges: list[CfgEdge] = []
    seen: set[CfgEdge] = set()
    for node in t.walk():
        nodes.add(node.node_id)
        for edge in handlers(node):
            if edge not in seen:
                seen.add(edge)
                edges.append(edge)
    cfg = Cfg(nodes=frozenset(nodes), edges=tuple(edges))
    logger.debug('cfg_built', nodes=len(cfg.nodes), edges=len(cfg.edges))
    return cfg


def _dot_label(node: AstNode) -> str:
    label = node.kind.value
    detail = node.text or node.name
    if detail:
        label += f'\\n{detail}'
    return label.replace('"', '\\"')


def cfg_to_dot(cfg: Cfg, tree: AstNode, *, name: str = 'cfg') -> str:
    """Graphviz source; nodes are labeled with kind and text, edges with their kind."""
    lines = [f'digraph {name} {{', '    node [shape=box, fontname="monospace"];']
    lines.extend(
        f'    n{node.node_id} [label="{_dot_label(node)}"];' for node in tree.walk() if node.node_id in cfg.nodes
    )
    lines.extend(f'    n{e.source} -> n{e.target} [label="{e.kind.value}"];' for e in cfg.edges)
    lines.append('}')
    return '\n'.join(lines) + '\n'


def cfg_to_json(cfg: Cfg) -> str:
    return json.dumps(cfg.to_dict(), indent=2) + '\n'
