"""Fixture-backed chat completions for offline runs.

A manifest (YAML) lists requests and canned replies::

    responses:
      - system_template: porting_system
        user_file: verilog/rom.v
        response: responses/rom.md
      - testbench: {reference_code: ref/rom.v, testbench: tb/rom_tb.v, instruction: tasks/rom.txt}
        response: responses/rom_tb.md
      - sha256: 3f1c...
        response: responses/raw.md

Each entry is turned into the exact message list a caller would send and
keyed by :func:`messages_digest`, so a fixture only answers the request it
was written for.
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Sequence
from pathlib import Path

import yaml
from hotlog import get_logger
from pydantic import BaseModel, Field

from astkit.exceptions import ConfigValidationError, FixtureNotFound, InputFileError
from astkit.templates import TemplateStore
from astkit.toolbridge.models import ChatMessage
from astkit.toolbridge.prompts import build_testbench_augmentation_prompt, render_message
from astkit.utils import read_text_utf8

logger = get_logger(__name__)


def messages_digest(messages: Sequence[ChatMessage]) -> str:
    payload = json.dumps(
        [{'role': m.role, 'content': m.content} for m in messages],
        ensure_ascii=False,
        sort_keys=True,
        separators=(',', ':'),
    )
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


class TestbenchInputs(BaseModel):
    reference_code: Path
    testbench: Path
    instruction: Path


class FixtureEntry(BaseModel):
    response: Path
    sha256: str | None = None
    system_template: str | None = None
    user_file: Path | None = None
    testbench: TestbenchInputs | None = None

    def messages(self, base: Path, store: TemplateStore) -> list[ChatMessage]:
        if self.testbench is not None:
            return build_testbench_augmentation_prompt(
                read_text_utf8(base / self.testbench.reference_code),
                read_text_utf8(base / self.testbench.testbench),
                read_text_utf8(base / self.testbench.instruction),
                templates=store,
            )
        messages: list[ChatMessage] = []
        if self.system_template:
            messages.append(render_message(store, self.system_template, 'system'))
        if self.user_file is not None:
            messages.append(ChatMessage(role='user', content=read_text_utf8(base / self.user_file)))
        return messages


class FixtureManifest(BaseModel):
    responses: list[FixtureEntry] = Field(default_factory=list)


class MockLlm:
    """Replies keyed by the digest of the full request messages."""

    def __init__(self, replies: dict[str, str]) -> None:
        self.replies = replies

    @classmethod
    def load(cls, manifest_path: Path, templates: TemplateStore | None = None) -> MockLlm:
        store = templates or TemplateStore()
        try:
            raw = yaml.safe_load(read_text_utf8(manifest_path)) or {}
        except (InputFileError, yaml.YAMLError) as exc:
            msg = f'cannot read mock fixture manifest {manifest_path}: {exc}'
            raise ConfigValidationError(msg) from exc
        manifest = FixtureManifest.model_validate(raw)
        base = manifest_path.parent
        replies: dict[str, str] = {}
        for entry in manifest.responses:
            key = entry.sha256 or messages_digest(entry.messages(base, store))
            replies[key] = read_text_utf8(base / entry.response)
        logger.debug('mock_fixtures_loaded', manifest=str(manifest_path), count=len(replies))
        return cls(replies)

    def reply(self, messages: Sequence[ChatMessage]) -> str:
        key = messages_digest(messages)
        try:
            return self.replies[key]
        except KeyError:
            msg = f'no mock fixture for request {key[:12]}'
            raise FixtureNotFound(msg) from None
