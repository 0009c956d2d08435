"""Pragma usage statistics for dataset records."""

from __future__ import annotations

from collections import Counter

from pydantic import BaseModel, Field

from astkit.hlsc.nodes import AstNode, NodeKind

LOOP_KINDS = frozenset({NodeKind.FOR_STMT, NodeKind.WHILE_STMT})


class PragmaSummary(BaseModel):
    counts: dict[str, int] = Field(default_factory=dict, description='HLS pragma directive name -> occurrences')
    max_loop_depth: int = 0
    pragmas_in_loops: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def directive_name(pragma: str) -> str | None:
    """``HLS PIPELINE II=1`` -> ``PIPELINE``; None for non-HLS pragmas."""
    words = pragma.split()
    if len(words) < 2 or words[0].upper() != 'HLS':  # noqa: PLR2004
        return None
    return words[1].upper()


def pragma_summary(tree: AstNode) -> PragmaSummary:
    counts: Counter[str] = Counter()
    max_depth = 0
    in_loops = 0
    stack: list[tuple[AstNode, int]] = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        if node.kind in LOOP_KINDS:
            depth += 1
            max_depth = max(max_depth, depth)
        if node.kind is NodeKind.PRAGMA and (name := directive_name(node.name or '')) is not None:
            counts[name] += 1
            in_loops += depth > 0
        stack.extend((child, depth) for child in node.children)
    return PragmaSummary(counts=dict(sorted(counts.items())), max_loop_depth=max_depth, pragmas_in_loops=in_loops)
