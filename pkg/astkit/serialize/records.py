"""Training records: instruction + serialized AST + HLS-C code."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from astkit.exceptions import DuplicateRecordId, EmptySection
from astkit.serialize.serializer import SerializedAst
from astkit.templates import TemplateStore


class TrainingVariant(str, Enum):
    """``ast`` feeds instruction + AST to the model; ``text`` feeds the instruction alone."""

    AST = 'ast'
    TEXT = 'text'


class TrainingRecord(BaseModel):
    id: str
    instruction: str
    ast: str
    code: str
    source_id: str
    cfg: str | None = Field(default=None, description='DOT control-flow graph, only with --with-cfg')

    def render(
        self,
        variant: TrainingVariant = TrainingVariant.AST,
        templates: TemplateStore | None = None,
    ) -> str:
        """Model-input text: instruction, then AST, then the code target."""
        store = templates or TemplateStore()
        return store.render('training_record', record=self, variant=variant.value)


def make_record_id(source_id: str, n: int = 0) -> str:
    return f'{source_id}#{n}'


def assemble_training_record(
    instruction: str,
    ast: SerializedAst,
    code: str,
    id: str,  # noqa: A002 - field name of the record
    source_id: str,
    *,
    cfg: str | None = None,
) -> TrainingRecord:
    """Build a record after checking that every section has content.

    Raises:
        EmptySection: instruction, AST or code is blank.
    """
    for section, value in (('instruction', instruction), ('ast', ast.text), ('code', code)):
        if not value.strip():
            msg = f'{section} section of record {id!r} is empty'
            raise EmptySection(msg)
    return TrainingRecord(
        id=id,
        instruction=instruction.strip(),
        ast=ast.text,
        code=code.strip() + '\n',
        source_id=source_id,
        cfg=cfg,
    )


class RecordBook:
    """Record ids seen in one dataset; a second record with the same id is rejected."""

    def __init__(self) -> None:
        self._ids: set[str] = set()

    def __contains__(self, record_id: str) -> bool:
        return record_id in self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def add(self, record: TrainingRecord) -> TrainingRecord:
        if record.id in self._ids:
            msg = f'record id {record.id!r} already used'
            raise DuplicateRecordId(msg)
        self._ids.add(record.id)
        return record
