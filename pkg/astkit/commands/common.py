"""Helpers shared by the command implementations."""

from __future__ import annotations

import sys
from pathlib import Path

from hotlog import get_logger

from astkit.config import GlobalConfig, load_config
from astkit.hlsc import AstNode, SourceFile, find_function, parse
from astkit.templates import TemplateStore
from astkit.toolbridge import ToolBridge

logger = get_logger(__name__)


def emit(text: str) -> None:
    """Write machine output to stdout unchanged (no markup, no wrapping)."""
    sys.stdout.write(text if text.endswith('\n') or not text else text + '\n')


def templates_for(config: GlobalConfig) -> TemplateStore:
    return TemplateStore(config.templates)


def bridge_for(config: GlobalConfig, templates: TemplateStore | None = None) -> ToolBridge:
    return ToolBridge(config.adapters, templates=templates or templates_for(config), seed=config.seed)


def load(config_path: Path | None) -> GlobalConfig:
    config = load_config(config_path)
    logger.debug('config_loaded', path=str(config.config_file) if config.config_file else None)
    return config


def parse_file(path: Path) -> AstNode:
    return parse(SourceFile.from_path(path))


def target_node(path: Path, top: str | None) -> AstNode:
    """The translation unit of *path*, or its function named *top*."""
    tree = parse_file(path)
    return find_function(tree, top) if top else tree
