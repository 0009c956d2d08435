from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, model_validator

from astkit.serialize.pragmas import PragmaSummary
from astkit.serialize.records import TrainingRecord, TrainingVariant
from astkit.templates import TemplateStore


class JobStatus(str, Enum):
    PENDING = 'pending'
    PORTED = 'ported'
    PARSE_FAILED = 'parse_failed'
    SYNTH_FAILED = 'synth_failed'
    ACCEPTED = 'accepted'

    @property
    def terminal(self) -> bool:
        return self in TERMINAL_STATUSES


TERMINAL_STATUSES = frozenset({JobStatus.PARSE_FAILED, JobStatus.SYNTH_FAILED, JobStatus.ACCEPTED})

# status -> statuses it may move to
TRANSITIONS: dict[JobStatus, frozenset[JobStatus]] = {
    JobStatus.PENDING: frozenset({JobStatus.PORTED, JobStatus.PARSE_FAILED}),
    JobStatus.PORTED: frozenset({JobStatus.SYNTH_FAILED, JobStatus.ACCEPTED}),
    JobStatus.PARSE_FAILED: frozenset(),
    JobStatus.SYNTH_FAILED: frozenset(),
    JobStatus.ACCEPTED: frozenset(),
}


class PortingJob(BaseModel):
    verilog_source_id: str
    verilog_text: str
    status: JobStatus = JobStatus.PENDING


class PortingResponse(BaseModel):
    hls_code: str
    instruction: str


class DatasetRecord(BaseModel):
    record: TrainingRecord
    synthesizable: bool
    rouge_max: float = Field(default=0.0, ge=0.0, le=1.0)
    kept: bool = False
    variant: TrainingVariant = TrainingVariant.AST
    pragmas: PragmaSummary = Field(default_factory=PragmaSummary)

    @model_validator(mode='after')
    def _kept_needs_synthesis(self) -> DatasetRecord:
        if self.kept and not self.synthesizable:
            msg = f'record {self.record.id!r} cannot be kept without passing synthesis'
            raise ValueError(msg)
        return self

    def to_row(self, templates: TemplateStore | None = None) -> dict[str, Any]:
        """Flat JSON-lines row; ``text`` is the rendered model input for ``variant``."""
        row: dict[str, Any] = {
            'id': self.record.id,
            'source_id': self.record.source_id,
            'instruction': self.record.instruction,
            'ast': self.record.ast,
            'code': self.record.code,
            'synthesizable': self.synthesizable,
            'rouge_max': self.rouge_max,
            'kept': self.kept,
            'variant': self.variant.value,
            'pragmas': self.pragmas.model_dump(),
        }
        if self.record.cfg is not None:
            row['cfg'] = self.record.cfg
        row['text'] = self.record.render(self.variant, templates)
        return row

    @classmethod
    def from_row(cls, row: dict[str, Any]) -> DatasetRecord:
        record = TrainingRecord(
            id=row['id'],
            instruction=row['instruction'],
            ast=row['ast'],
            code=row['code'],
            source_id=row['source_id'],
            cfg=row.get('cfg'),
        )
        return cls(
            record=record,
            synthesizable=row['synthesizable'],
            rouge_max=row.get('rouge_max', 0.0),
            kept=row.get('kept', False),
            variant=row.get('variant', TrainingVariant.AST.value),
            pragmas=PragmaSummary.model_validate(row.get('pragmas') or {}),
        )
