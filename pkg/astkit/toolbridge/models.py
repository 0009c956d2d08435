from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from astkit.exceptions import ConfigValidationError

PLACEHOLDERS = ('input', 'workdir', 'top', 'rtl', 'testbench')


class AdapterKind(str, Enum):
    LLM = 'llm'
    SYNTHESIS = 'synthesis'
    SIMULATION = 'simulation'


class MockRule(BaseModel):
    """Canned tool behavior chosen by the first rule whose pattern matches the input."""

    model_config = ConfigDict(frozen=True)

    pattern: str = Field(default='', description='Regex searched in the tool input; empty matches anything')
    exit_code: int = 0
    log: str = ''
    sleep: float = Field(default=0.0, ge=0, description='Seconds the mock pretends to run')
    rtl: bool = Field(default=True, description='Synthesis only: whether an RTL file is produced')


class ChatMessage(BaseModel):
    model_config = ConfigDict(frozen=True)

    role: Literal['system', 'user', 'assistant']
    content: str


class ToolAdapter(BaseModel):
    """Declarative description of one external tool or service."""

    name: str
    kind: AdapterKind
    command_template: str = Field(
        default='{input}',
        description='argv template; placeholders {input} {workdir} {top} {rtl} {testbench}',
    )
    timeout: float = Field(default=600.0, description='Seconds before the invocation is abandoned')
    env: dict[str, str] = Field(default_factory=dict)
    mock_mode: bool = False
    parallelism: int = Field(default=1, description='Concurrent invocations allowed')
    failure_patterns: list[str] = Field(
        default_factory=lambda: ['ERROR: [HLS', 'ERROR: [SYNCHK'],
        description='Log substrings that mark a run as failed even on exit status 0',
    )
    rtl_glob: str = Field(default='**/*.v', description='Where synthesis leaves RTL, relative to the workdir')
    log_file: str | None = Field(default=None, description='Tool log inside the workdir appended to stdout')
    keep_workdir: bool = Field(default=False, description='Leave the per-invocation workdir on disk for inspection')
    mock_rules: list[MockRule] = Field(default_factory=list)

    # chat-completion settings
    endpoint: str | None = None
    credential_env: str | None = 'OPENAI_API_KEY'
    model: str = 'gpt-4o'
    temperature: float = 0.0
    max_retries: int = Field(default=3, ge=0)
    backoff_base: float = Field(default=1.0, ge=0)
    rate_per_second: float | None = Field(default=None, description='Token-bucket refill rate; None disables')
    burst: int = Field(default=1, ge=1)
    fixtures: Path | None = Field(default=None, description='Mock LLM fixture manifest (YAML)')

    @field_validator('command_template')
    @classmethod
    def _has_input(cls, value: str) -> str:
        if '{input}' not in value:
            msg = f'command_template must contain {{input}}: {value!r}'
            raise ConfigValidationError(msg)
        return value

    @field_validator('timeout')
    @classmethod
    def _positive_timeout(cls, value: float) -> float:
        if value <= 0:
            msg = f'timeout must be > 0, got {value}'
            raise ConfigValidationError(msg)
        return value

    @field_validator('parallelism')
    @classmethod
    def _positive_parallelism(cls, value: int) -> int:
        if value < 1:
            msg = f'parallelism must be >= 1, got {value}'
            raise ConfigValidationError(msg)
        return value

    @model_validator(mode='after')
    def _llm_needs_endpoint(self) -> ToolAdapter:
        if self.kind is AdapterKind.LLM and not self.mock_mode and not self.endpoint:
            msg = f'adapter {self.name!r}: a live llm adapter needs an endpoint'
            raise ConfigValidationError(msg)
        return self


class SynthResult(BaseModel):
    success: bool
    log_excerpt: str = ''
    rtl_path: Path | None = None
    wall_time: float = 0.0
    failure_pattern: str | None = None

    @model_validator(mode='after')
    def _rtl_on_success(self) -> SynthResult:
        if self.success and self.rtl_path is None:
            msg = 'a successful synthesis result needs an rtl_path'
            raise ValueError(msg)
        return self


class SimResult(BaseModel):
    log_text: str
    exit_ok: bool
    wall_time: float = 0.0
