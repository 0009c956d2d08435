from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, field_validator, model_validator

from astkit.analysis.optimize import OptimizeConfig
from astkit.exceptions import ConfigValidationError
from astkit.serialize.records import TrainingVariant
from astkit.toolbridge.models import AdapterKind, MockRule, ToolAdapter

DEFAULT_CONFIG_FILE = 'astkit.yaml'

# Vitis HLS rejects dynamic allocation; the mock reproduces that failure.
MOCK_SYNTH_RULES = [
    MockRule(
        pattern=r'\b(?:malloc|calloc|realloc|free)\s*\(',
        exit_code=0,
        log=(
            'INFO: [HLS 200-10] Analyzing design file\n'
            "ERROR: [HLS 214-194] in function 'top_module': Undefined function malloc\n"
            'ERROR: [HLS 200-70] Pre-synthesis failed.\n'
        ),
        rtl=False,
    ),
    MockRule(log='INFO: [HLS 200-111] Finished Command csynth_design\n'),
]
MOCK_SIM_RULES = [MockRule(log='CONSTRAINT 1 PASS\n')]


def default_adapters() -> list[ToolAdapter]:
    """Offline adapters used when no config file is present."""
    return [
        ToolAdapter(name='mock-llm', kind=AdapterKind.LLM, mock_mode=True),
        ToolAdapter(
            name='mock-vitis',
            kind=AdapterKind.SYNTHESIS,
            mock_mode=True,
            command_template='vitis_hls -f {workdir}/run.tcl -tclargs {input} {top}',
            mock_rules=MOCK_SYNTH_RULES,
        ),
        ToolAdapter(
            name='mock-sim',
            kind=AdapterKind.SIMULATION,
            mock_mode=True,
            command_template='iverilog -o {workdir}/sim {input} {rtl}',
            mock_rules=MOCK_SIM_RULES,
        ),
    ]


class GlobalConfig(BaseModel):
    """Toolkit configuration, usually loaded from ``astkit.yaml``."""

    adapters: list[ToolAdapter] = Field(default_factory=default_adapters)
    optimize: OptimizeConfig = Field(default_factory=OptimizeConfig)
    leakage_threshold: float = Field(default=0.4, description='Records scoring at or above this are dropped')
    k_set: list[int] = Field(default_factory=lambda: [1, 5, 10])
    workers: int = Field(default=1, description='Concurrent porting jobs')
    seed: int = Field(default=3407, description='Sent with every LLM request')
    top: str = Field(default='top_module', description='Entry function looked up in HLS-C sources')
    templates: dict[str, Path] = Field(default_factory=dict, description='Template name -> override file')
    retries: int = Field(default=0, ge=0, description='Extra porting attempts when a reply does not parse')
    variant: TrainingVariant = TrainingVariant.AST
    with_cfg: bool = Field(default=False, description='Append the DOT control-flow graph to records')
    tiers: tuple[int, int] | None = Field(default=None, description='Explicit tier boundaries (b1, b2)')
    config_file: Path | None = Field(default=None, exclude=True)

    @field_validator('workers')
    @classmethod
    def _positive_workers(cls, value: int) -> int:
        if value < 1:
            msg = f'workers must be >= 1, got {value}'
            raise ConfigValidationError(msg)
        return value

    @field_validator('leakage_threshold')
    @classmethod
    def _threshold_range(cls, value: float) -> float:
        if not 0 < value <= 1:
            msg = f'leakage_threshold must be in (0, 1], got {value}'
            raise ConfigValidationError(msg)
        return value

    @field_validator('k_set')
    @classmethod
    def _positive_ks(cls, value: list[int]) -> list[int]:
        if not value or any(k < 1 for k in value):
            msg = f'k_set must be a non-empty list of positive integers, got {value}'
            raise ConfigValidationError(msg)
        return sorted(set(value))

    @model_validator(mode='after')
    def _unique_adapter_names(self) -> GlobalConfig:
        names = [a.name for a in self.adapters]
        if len(names) != len(set(names)):
            msg = f'adapter names must be unique: {names}'
            raise ConfigValidationError(msg)
        return self
