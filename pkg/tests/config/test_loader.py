from dataclasses import dataclass
from pathlib import Path

import pytest

from astkit.config import DEFAULT_CONFIG_FILE, env_overrides, load_config
from astkit.exceptions import ConfigError, ConfigValidationError, InvalidOptimizeConfig
from astkit.serialize import TrainingVariant
from astkit.toolbridge import AdapterKind
from tests.support.paths import PIPELINE


def test_defaults_without_a_file():
    config = load_config(environ={})
    assert config.config_file is None
    assert config.seed == 3407
    assert config.k_set == [1, 5, 10]
    assert config.leakage_threshold == 0.4
    assert [a.kind for a in config.adapters] == [AdapterKind.LLM, AdapterKind.SYNTHESIS, AdapterKind.SIMULATION]
    assert all(a.mock_mode for a in config.adapters)


def test_fixture_paths_resolve_against_the_file():
    config = load_config(PIPELINE / 'astkit.yaml', environ={})
    llm = next(a for a in config.adapters if a.kind is AdapterKind.LLM)
    assert llm.fixtures == PIPELINE / 'manifest.yaml'
    assert config.workers == 2
    assert config.config_file == PIPELINE / 'astkit.yaml'


def test_working_directory_file_is_picked_up(isolated_env: Path):
    config_text = 'workers: 3\ntemplates:\n  porting_system: p.j2\n'
    (isolated_env / DEFAULT_CONFIG_FILE).write_text(config_text, encoding='utf-8')
    config = load_config(environ={})
    assert config.workers == 3
    assert config.templates == {'porting_system': Path('p.j2')}


def test_environment_overrides_file(tmp_path: Path):
    path = tmp_path / 'astkit.yaml'
    path.write_text('workers: 2\nseed: 1\n', encoding='utf-8')
    environ = {
        'ASTKIT_WORKERS': '8',
        'ASTKIT_K_SET': '1, 3',
        'ASTKIT_WITH_CFG': 'true',
        'ASTKIT_VARIANT': 'text',
    }
    config = load_config(path, environ=environ)
    assert config.workers == 8
    assert config.seed == 1
    assert config.k_set == [1, 3]
    assert config.with_cfg is True
    assert config.variant is TrainingVariant.TEXT


def test_env_overrides_ignore_unknown_variables():
    assert env_overrides({'ASTKIT_UNKNOWN': 'x', 'ASTKIT_TOP': 'main'}) == {'top': 'main'}


@dataclass
class BadConfigCase:
    name: str
    text: str
    match: str


@pytest.mark.parametrize(
    'case',
    [
        BadConfigCase(name='zero_workers', text='workers: 0\n', match='workers'),
        BadConfigCase(name='threshold_above_one', text='leakage_threshold: 1.5\n', match='leakage_threshold'),
        BadConfigCase(name='non_positive_k', text='k_set: [0, 1]\n', match='k_set'),
        BadConfigCase(name='top_level_list', text='- a\n- b\n', match='mapping'),
        BadConfigCase(
            name='duplicate_adapters',
            text=(
                'adapters:\n'
                '  - {name: x, kind: llm, mock_mode: true}\n'
                '  - {name: x, kind: synthesis, mock_mode: true}\n'
            ),
            match='unique',
        ),
        BadConfigCase(
            name='live_llm_without_endpoint',
            text='adapters:\n  - {name: gpt, kind: llm}\n',
            match='endpoint',
        ),
        BadConfigCase(
            name='command_without_input',
            text='adapters:\n  - {name: v, kind: synthesis, command_template: vitis_hls -f run.tcl}\n',
            match='input',
        ),
    ],
    ids=lambda c: c.name,
)
def test_invalid_values(tmp_path: Path, case: BadConfigCase):
    path = tmp_path / 'astkit.yaml'
    path.write_text(case.text, encoding='utf-8')
    with pytest.raises(ConfigValidationError, match=case.match):
        load_config(path, environ={})


def test_optimize_config_protects_semantic_kinds(tmp_path: Path):
    path = tmp_path / 'astkit.yaml'
    path.write_text('optimize:\n  collapsible_kinds: [IfStmt]\n', encoding='utf-8')
    with pytest.raises(InvalidOptimizeConfig, match='IfStmt'):
        load_config(path, environ={})


def test_missing_explicit_file(tmp_path: Path):
    with pytest.raises(ConfigError, match='not found'):
        load_config(tmp_path / 'nope.yaml', environ={})


def test_invalid_yaml(tmp_path: Path):
    path = tmp_path / 'astkit.yaml'
    path.write_text('workers: [1\n', encoding='utf-8')
    with pytest.raises(ConfigError, match='not valid YAML'):
        load_config(path, environ={})


def test_bad_environment_value():
    with pytest.raises(ConfigValidationError):
        load_config(environ={'ASTKIT_WORKERS': 'many'})
