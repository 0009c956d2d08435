"""Tree optimization: drop redundant nodes and collapse wrapper chains."""

from __future__ import annotations

from dataclasses import replace

from hotlog import get_logger
from pydantic import BaseModel, ConfigDict, Field, field_validator

from astkit.exceptions import InvalidOptimizeConfig
from astkit.hlsc.nodes import SEMANTIC_KINDS, AstNode, NodeKind

logger = get_logger(__name__)


class OptimizeConfig(BaseModel):
    """Which node kinds optimization removes and which it collapses."""

    model_config = ConfigDict(frozen=True)

    redundant_kinds: frozenset[NodeKind] = Field(
        default=frozenset({NodeKind.COMMENT, NodeKind.INCLUDE}),
        description='Node kinds deleted together with their subtrees',
    )
    collapsible_kinds: frozenset[NodeKind] = Field(
        default=frozenset({NodeKind.EXPR_STMT, NodeKind.COMPOUND_STMT}),
        description=(
            'Wrapper kinds replaced by their only child. A CompoundStmt only '
            'collapses when nested directly in another CompoundStmt'
        ),
    )

    @field_validator('redundant_kinds', 'collapsible_kinds')
    @classmethod
    def _keep_semantic_kinds(cls, kinds: frozenset[NodeKind]) -> frozenset[NodeKind]:
        clash = kinds & SEMANTIC_KINDS
        if clash:
            names = ', '.join(sorted(k.value for k in clash))
            msg = f'control/data node kinds cannot be removed or collapsed: {names}'
            raise InvalidOptimizeConfig(msg)
        return kinds


def _collapses(node: AstNode, parent_kind: NodeKind | None, cfg: OptimizeConfig) -> bool:
    if node.kind not in cfg.collapsible_kinds or len(node.children) != 1:
        return False
    if node.kind is NodeKind.COMPOUND_STMT:
        return parent_kind is NodeKind.COMPOUND_STMT
    return True


def _visit(node: AstNode, parent_kind: NodeKind | None, cfg: OptimizeConfig) -> AstNode | None:
    if node.kind in cfg.redundant_kinds:
        return None
    children = tuple(
        kept for child in node.children if (kept := _visit(child, node.kind, cfg)) is not None
    )
    rebuilt = replace(node, children=children) if children != node.children else node
    if _collapses(rebuilt, parent_kind, cfg):
        return rebuilt.children[0]
    return rebuilt


def optimize(t: AstNode, cfg: OptimizeConfig | None = None) -> AstNode:
    """Return an optimized copy of *t*; surviving nodes keep their ids.

    Children are rewritten before their parent, so collapses cascade up a
    chain of wrappers in one pass. A root that is itself redundant is kept.
    """
    cfg = cfg or OptimizeConfig()
    result = _visit(t, None, cfg)
    if result is None:
        result = replace(t, children=())
    logger.debug('tree_optimized', before=t.size(), after=result.size())
    return result
