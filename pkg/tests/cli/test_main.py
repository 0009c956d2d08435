from dataclasses import dataclass
from pathlib import Path

import pytest

from astkit.cli.main import app
from astkit.cli.testing import CliRunner
from astkit.version import __version__

runner = CliRunner()


def test_version_lists_template_versions() -> None:
    result = runner.invoke(app, ['--version'])
    assert result.exit_code == 0
    assert f'astkit {__version__}' in result.output
    assert 'porting_system v1' in result.output


def test_no_subcommand_prints_help() -> None:
    result = runner.invoke(app)
    assert result.exit_code == 0
    assert 'Usage' in result.output


def test_unknown_command_is_a_usage_error() -> None:
    result = runner.invoke(app, ['transmogrify'])
    assert result.exit_code == 2


@dataclass
class FailureCase:
    name: str
    args: list[str]
    error_has: str
    source: str | None = None


@pytest.mark.parametrize(
    'case',
    [
        FailureCase(
            name='syntax_error',
            args=['parse', '{source}'],
            source='void top_module(int a {\n',
            error_has='syntax_error',
        ),
        FailureCase(name='missing_source', args=['serialize', '{source}'], error_has='file not found'),
        FailureCase(
            name='unknown_top',
            args=['serialize', '{source}', '--top', 'nope'],
            source='void top_module(int a) {\n}\n',
            error_has='nope',
        ),
        FailureCase(
            name='missing_config',
            args=['cfg', '{source}', '--config', 'absent.yaml'],
            source='void top_module(int a) {\n}\n',
            error_has='not found',
        ),
    ],
    ids=lambda c: c.name,
)
def test_domain_errors_exit_one(case: FailureCase, tmp_path: Path) -> None:
    source = tmp_path / 'design.cpp'
    if case.source is not None:
        source.write_text(case.source, encoding='utf-8')
    args = [arg.replace('{source}', str(source)) for arg in case.args]

    result = runner.invoke(app, args, catch_exceptions=False)

    assert result.exit_code == 1
    assert 'error:' in result.output
    assert case.error_has in result.output
