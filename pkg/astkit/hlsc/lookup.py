from __future__ import annotations

from astkit.exceptions import AmbiguousFunction, FunctionNotFound
from astkit.hlsc.nodes import AstNode, NodeKind

DEFAULT_TOP = 'top_module'


def function_names(tree: AstNode) -> list[str]:
    return [n.name or '' for n in tree.walk() if n.kind is NodeKind.FUNCTION_DEF]


def find_function(tree: AstNode, name: str = DEFAULT_TOP) -> AstNode:
    """Return the unique FunctionDef called *name*.

    Raises:
        FunctionNotFound: no definition with that name.
        AmbiguousFunction: more than one definition with that name.
    """
    matches = [n for n in tree.walk() if n.kind is NodeKind.FUNCTION_DEF and n.name == name]
    if not matches:
        raise FunctionNotFound(name)
    if len(matches) > 1:
        raise AmbiguousFunction(name, len(matches))
    return matches[0]
