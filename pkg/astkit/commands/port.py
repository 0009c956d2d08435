"""Single-file porting and testbench augmentation through the LLM adapter."""

from __future__ import annotations

from pathlib import Path

from hotlog import get_logger

from astkit.commands.common import bridge_for, emit, load, templates_for
from astkit.console import console
from astkit.dataset import build_porting_prompt, parse_porting_response
from astkit.hlsc import SourceFile, find_function, parse
from astkit.toolbridge import build_testbench_augmentation_prompt, extract_testbench
from astkit.utils import read_text_utf8, write_text_utf8

logger = get_logger(__name__)


def port_command(source: Path, *, config_path: Path | None) -> int:
    """Port one Verilog file and print the HLS-C code followed by its instruction."""
    config = load(config_path)
    templates = templates_for(config)
    reply = bridge_for(config, templates).chat(build_porting_prompt(read_text_utf8(source), templates=templates))
    response = parse_porting_response(reply)
    find_function(parse(SourceFile.from_text(response.hls_code, name=source.name)), config.top)
    emit(f'{response.hls_code}\n{response.instruction}\n')
    return 0


def testbench_command(
    reference: Path,
    testbench: Path,
    instruction: Path,
    out: Path,
    *,
    config_path: Path | None,
) -> int:
    """Ask the LLM for a constraint-checking version of *testbench* and write it to *out*."""
    config = load(config_path)
    templates = templates_for(config)
    messages = build_testbench_augmentation_prompt(
        read_text_utf8(reference),
        read_text_utf8(testbench),
        read_text_utf8(instruction),
        templates=templates,
    )
    augmented = extract_testbench(bridge_for(config, templates).chat(messages))
    out.parent.mkdir(parents=True, exist_ok=True)
    write_text_utf8(out, augmented)
    checks = augmented.count('CONSTRAINT')
    logger.info('testbench_augmented', out=str(out), constraint_lines=checks)
    console.print(f'[green]✓[/green] {out}')
    return 0
