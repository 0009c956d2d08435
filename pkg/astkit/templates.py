"""Versioned Jinja2 templates for prompts and training records.

Each template starts with a ``{#- version: N -#}`` header. Any template can
be replaced by a file path from config; the override keeps its own header.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from hotlog import get_logger
from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template, TemplateNotFound as JinjaNotFound

from astkit.exceptions import TemplateNotFound
from astkit.utils import read_text_utf8

logger = get_logger(__name__)

TEMPLATES_DIR = Path(__file__).parent / 'resources' / 'templates'
TEMPLATE_NAMES = ('porting_system', 'testbench_system', 'testbench_user', 'training_record')

_VERSION = re.compile(r'\{#-?\s*version:\s*(\S+)\s*-?#\}')


def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(TEMPLATES_DIR)),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
        autoescape=False,  # noqa: S701 - prompt text, not HTML
    )


class TemplateStore:
    """Loads bundled templates, honoring per-name path overrides."""

    def __init__(self, overrides: Mapping[str, Path] | None = None) -> None:
        self.overrides = dict(overrides or {})
        self._env = _environment()

    def source(self, name: str) -> str:
        override = self.overrides.get(name)
        if override is not None:
            if not override.is_file():
                msg = f'template override for {name!r} not found: {override}'
                raise TemplateNotFound(msg)
            return read_text_utf8(override)
        path = TEMPLATES_DIR / f'{name}.j2'
        if not path.is_file():
            msg = f'no bundled template named {name!r}'
            raise TemplateNotFound(msg)
        return read_text_utf8(path)

    def _template(self, name: str) -> Template:
        if name in self.overrides:
            return self._env.from_string(self.source(name))
        try:
            return self._env.get_template(f'{name}.j2')
        except JinjaNotFound as exc:
            msg = f'no bundled template named {name!r}'
            raise TemplateNotFound(msg) from exc

    def render(self, name: str, **context: Any) -> str:
        text = self._template(name).render(**context)
        logger.debug('template_rendered', template=name, version=self.version(name))
        return text

    def version(self, name: str) -> str:
        match = _VERSION.search(self.source(name))
        return match.group(1) if match else 'unversioned'

    def versions(self) -> dict[str, str]:
        return {name: self.version(name) for name in TEMPLATE_NAMES}
