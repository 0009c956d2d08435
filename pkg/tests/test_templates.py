from pathlib import Path

import pytest
from jinja2 import UndefinedError

from astkit.exceptions import TemplateNotFound
from astkit.templates import TEMPLATE_NAMES, TemplateStore


def test_bundled_templates_are_versioned():
    assert TemplateStore().versions() == dict.fromkeys(TEMPLATE_NAMES, '1')


def test_override_replaces_template_and_version(tmp_path: Path):
    override = tmp_path / 'porting.j2'
    override.write_text('{#- version: 2b -#}\nPort this: {{ extra }}\n', encoding='utf-8')
    store = TemplateStore({'porting_system': override})
    assert store.version('porting_system') == '2b'
    assert store.version('training_record') == '1'
    assert store.render('porting_system', extra='now') == 'Port this: now\n'


def test_override_without_header_is_unversioned(tmp_path: Path):
    override = tmp_path / 'record.j2'
    override.write_text('{{ record }}', encoding='utf-8')
    assert TemplateStore({'training_record': override}).version('training_record') == 'unversioned'


def test_missing_override(tmp_path: Path):
    store = TemplateStore({'porting_system': tmp_path / 'gone.j2'})
    with pytest.raises(TemplateNotFound, match='gone.j2'):
        store.render('porting_system')


def test_unknown_bundled_name():
    with pytest.raises(TemplateNotFound, match='nope'):
        TemplateStore().source('nope')


def test_strict_undefined_rejects_missing_context():
    with pytest.raises(UndefinedError, match='record'):
        TemplateStore().render('training_record', variant='ast')
