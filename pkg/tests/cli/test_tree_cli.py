from pathlib import Path

from astkit.cli.main import app
from astkit.cli.testing import CliRunner
from astkit.hlsc import SourceFile, parse, parse_text
from tests.cli.helpers import json_payload
from tests.serialize.test_serializer import ROM_AST
from tests.support.paths import ROM_SOURCE

runner = CliRunner()


def test_parse_prints_source_that_reparses_to_the_same_tree() -> None:
    result = runner.invoke(app, ['parse', str(ROM_SOURCE)])
    assert result.exit_code == 0
    assert parse_text(result.output).structurally_equal(parse(SourceFile.from_path(ROM_SOURCE)))


def test_parse_dump_json_for_one_function() -> None:
    result = runner.invoke(app, ['parse', str(ROM_SOURCE), '--top', 'top_module', '--dump-json'])
    assert result.exit_code == 0
    data = json_payload(result.output)
    assert data['kind'] == 'FunctionDef'
    assert data['name'] == 'top_module'


def test_optimize_drops_comments_and_includes() -> None:
    result = runner.invoke(app, ['optimize', str(ROM_SOURCE)])
    assert result.exit_code == 0
    assert '#include' not in result.output
    assert '//' not in result.output
    assert 'void top_module(' in result.output


def test_serialize_prints_the_rom_ast() -> None:
    result = runner.invoke(app, ['serialize', str(ROM_SOURCE)])
    assert result.exit_code == 0
    assert ROM_AST + '\n' in result.output


def test_serialize_with_cfg_appends_dot() -> None:
    result = runner.invoke(app, ['serialize', str(ROM_SOURCE), '--with-cfg'])
    assert result.exit_code == 0
    assert ROM_AST + '\n\ndigraph cfg {' in result.output


def test_serialize_instruction_renders_a_training_record() -> None:
    result = runner.invoke(app, ['serialize', str(ROM_SOURCE), '--instruction', 'Read the ROM.'])
    assert result.exit_code == 0
    assert '### Instruction\nRead the ROM.\n\n### AST\n' + ROM_AST in result.output
    assert '### Code\n#include <ap_int.h>' in result.output


def test_serialize_text_variant_has_no_ast_section() -> None:
    result = runner.invoke(
        app,
        ['serialize', str(ROM_SOURCE), '--instruction', 'Read the ROM.', '--variant', 'text'],
    )
    assert result.exit_code == 0
    assert '### AST' not in result.output
    assert '### Instruction\nRead the ROM.\n\n### Code\n' in result.output


def test_cfg_json_lists_typed_edges() -> None:
    result = runner.invoke(app, ['cfg', str(ROM_SOURCE), '--format', 'json'])
    assert result.exit_code == 0
    data = json_payload(result.output)
    kinds = {edge['kind'] for edge in data['edges']}
    assert {'func_body', 'then', 'assign'} <= kinds
    assert all(edge['from'] in data['nodes'] and edge['to'] in data['nodes'] for edge in data['edges'])


def test_cfg_dot_is_named_after_the_function() -> None:
    result = runner.invoke(app, ['cfg', str(ROM_SOURCE)])
    assert result.exit_code == 0
    assert 'digraph top_module {' in result.output
    assert '[label="then"]' in result.output


def test_config_top_selects_the_function(tmp_path: Path) -> None:
    source = tmp_path / 'two.cpp'
    source.write_text('void helper(int a) {\n}\nvoid kernel(int b) {\n    b = 1;\n}\n', encoding='utf-8')
    config = tmp_path / 'astkit.yaml'
    config.write_text('top: kernel\n', encoding='utf-8')
    result = runner.invoke(app, ['serialize', str(source), '-c', str(config)])
    assert result.exit_code == 0
    assert 'FuncName: kernel, Params: int\nAsgnmnt: b = 1' in result.output
