"""parse / optimize / cfg / serialize: single-file tree commands."""

from __future__ import annotations

import json
from enum import Enum
from pathlib import Path

from hotlog import get_logger

from astkit.analysis import analyze_control_flow, cfg_to_dot, cfg_to_json, optimize
from astkit.commands.common import emit, load, target_node, templates_for
from astkit.hlsc import AstNode, pretty_print
from astkit.serialize import TrainingVariant, assemble_training_record, make_record_id, serialize
from astkit.utils import read_text_utf8

logger = get_logger(__name__)


class CfgFormat(str, Enum):
    DOT = 'dot'
    JSON = 'json'


def _dump(node: AstNode) -> str:
    return json.dumps(node.to_dict(), indent=2, ensure_ascii=False)


def parse_command(source: Path, *, top: str | None, dump_json: bool) -> int:
    node = target_node(source, top)
    emit(_dump(node) if dump_json else pretty_print(node))
    return 0


def optimize_command(source: Path, *, top: str | None, dump_json: bool, config_path: Path | None) -> int:
    config = load(config_path)
    before = target_node(source, top)
    after = optimize(before, config.optimize)
    logger.info('optimized', source=str(source), nodes_before=before.size(), nodes_after=after.size())
    emit(_dump(after) if dump_json else pretty_print(after))
    return 0


def cfg_command(source: Path, *, top: str | None, fmt: CfgFormat, config_path: Path | None) -> int:
    config = load(config_path)
    function = optimize(target_node(source, top or config.top), config.optimize)
    cfg = analyze_control_flow(function)
    emit(cfg_to_dot(cfg, function, name=function.name or 'cfg') if fmt is CfgFormat.DOT else cfg_to_json(cfg))
    return 0


def serialize_command(  # noqa: PLR0913 - mirrors the CLI flags
    source: Path,
    *,
    top: str | None,
    indent: bool,
    with_cfg: bool,
    instruction: str | None,
    variant: TrainingVariant | None,
    config_path: Path | None,
) -> int:
    """Print the serialized AST, or a full training record when an instruction is given."""
    config = load(config_path)
    function = optimize(target_node(source, top or config.top), config.optimize)
    ast_text = serialize(function, indent=indent)
    cfg_text = cfg_to_dot(analyze_control_flow(function), function) if with_cfg or config.with_cfg else None
    if instruction is None:
        emit(ast_text.text if cfg_text is None else f'{ast_text.text}\n\n{cfg_text}')
        return 0
    record = assemble_training_record(
        instruction,
        ast_text,
        read_text_utf8(source),
        make_record_id(source.name),
        source.name,
        cfg=cfg_text,
    )
    emit(record.render(variant or config.variant, templates_for(config)))
    return 0
