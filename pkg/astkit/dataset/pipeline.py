"""Dataset build: port Verilog with the LLM, parse, synthesize, serialize, filter.

Jobs run on a thread pool; the calling thread is the only ledger writer
and consumes results in submission order, so output does not depend on
scheduling.
"""

from __future__ import annotations

import json
import re
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from hotlog import get_logger
from pydantic import BaseModel, Field

from astkit.analysis.cfg import analyze_control_flow, cfg_to_dot
from astkit.analysis.optimize import optimize
from astkit.config.models import GlobalConfig
from astkit.dataset.leakage import filter_leakage
from astkit.dataset.ledger import JobLedger, LedgerEntry, ledger_path_for
from astkit.dataset.models import DatasetRecord, JobStatus, PortingJob, PortingResponse
from astkit.dataset.prompts import build_porting_prompt
from astkit.dataset.response import parse_porting_response
from astkit.exceptions import AstkitError, EmptyInput, ParseError, PipelineError, SerializeError, ToolError
from astkit.hlsc.lookup import find_function
from astkit.hlsc.nodes import SourceFile
from astkit.hlsc.parser import parse
from astkit.serialize.pragmas import PragmaSummary, pragma_summary
from astkit.serialize.records import RecordBook, TrainingRecord, assemble_training_record, make_record_id
from astkit.serialize.serializer import serialize
from astkit.templates import TemplateStore
from astkit.toolbridge.bridge import ToolBridge
from astkit.utils import read_jsonl, read_text_utf8, write_jsonl, write_text_utf8

logger = get_logger(__name__)

VERILOG_SUFFIXES = ('.v', '.sv')
# errors that make a port unusable rather than merely interrupted
PORT_REJECTIONS = (PipelineError, ParseError, SerializeError)


class BuildSummary(BaseModel):
    sources: int = 0
    statuses: dict[str, int] = Field(default_factory=lambda: {s.value: 0 for s in JobStatus})
    records: int = 0
    kept: int = 0
    dropped_leakage: int = 0
    skipped: int = Field(default=0, description='Jobs already terminal in the ledger')
    pragmas: dict[str, int] = Field(default_factory=dict)
    external_calls: dict[str, int] = Field(default_factory=dict)


@dataclass
class _JobResult:
    source_id: str
    entries: list[LedgerEntry] = field(default_factory=list)


def collect_sources(corpus_dir: Path) -> list[PortingJob]:
    """Verilog files under *corpus_dir*, ordered by their relative POSIX path."""
    paths = sorted(
        (p for p in corpus_dir.rglob('*') if p.is_file() and p.suffix in VERILOG_SUFFIXES),
        key=lambda p: p.relative_to(corpus_dir).as_posix(),
    )
    return [
        PortingJob(verilog_source_id=p.relative_to(corpus_dir).as_posix(), verilog_text=read_text_utf8(p))
        for p in paths
    ]


def _error_entry(source_id: str, status: JobStatus, exc: AstkitError) -> LedgerEntry:
    return LedgerEntry(
        source_id=source_id,
        status=status,
        error=str(exc),
        category=exc.get_log_category(),
    )


def _crash_entry(source_id: str, status: JobStatus, exc: Exception) -> LedgerEntry:
    logger.error('job_crashed', source=source_id, error_type=type(exc).__name__, error=str(exc))
    return LedgerEntry(source_id=source_id, status=status, error=str(exc) or repr(exc), category=type(exc).__name__)


class DatasetBuilder:
    """Runs porting jobs against one ledger."""

    def __init__(self, config: GlobalConfig, bridge: ToolBridge, templates: TemplateStore) -> None:
        self.config = config
        self.bridge = bridge
        self.templates = templates

    def port(self, job: PortingJob) -> tuple[PortingResponse, TrainingRecord, PragmaSummary]:
        """LLM port plus parse/serialize; retried ``config.retries`` times on rejection."""
        messages = build_porting_prompt(job.verilog_text, templates=self.templates)
        attempt = 0
        while True:
            attempt += 1
            reply = self.bridge.chat(messages)
            try:
                return self._assemble(job, parse_porting_response(reply))
            except PORT_REJECTIONS as exc:
                if attempt > self.config.retries:
                    raise
                logger.warning('port_rejected_retrying', source=job.verilog_source_id, attempt=attempt, error=str(exc))

    def _assemble(
        self,
        job: PortingJob,
        response: PortingResponse,
    ) -> tuple[PortingResponse, TrainingRecord, PragmaSummary]:
        source = SourceFile.from_text(response.hls_code, name=job.verilog_source_id)
        tree = parse(source)
        top = optimize(find_function(tree, self.config.top), self.config.optimize)
        cfg = cfg_to_dot(analyze_control_flow(top), top) if self.config.with_cfg else None
        record = assemble_training_record(
            response.instruction,
            serialize(top),
            response.hls_code,
            make_record_id(job.verilog_source_id),
            job.verilog_source_id,
            cfg=cfg,
        )
        return response, record, pragma_summary(tree)

    def run_job(self, job: PortingJob, status: JobStatus, payload: dict[str, Any] | None) -> _JobResult:
        result = _JobResult(job.verilog_source_id)
        source_id = job.verilog_source_id
        if status is JobStatus.PENDING:
            try:
                _response, record, pragmas = self.port(job)
            except PORT_REJECTIONS as exc:
                result.entries.append(_error_entry(source_id, JobStatus.PARSE_FAILED, exc))
                return result
            except ToolError as exc:
                result.entries.append(_error_entry(source_id, JobStatus.PENDING, exc))
                return result
            payload = {'record': record.model_dump(mode='json'), 'pragmas': pragmas.model_dump()}
            result.entries.append(LedgerEntry(source_id=source_id, status=JobStatus.PORTED, payload=payload))

        assert payload is not None  # noqa: S101 - ported jobs always carry their record
        record = TrainingRecord.model_validate(payload['record'])
        try:
            with self.bridge.synthesize(record.code, self.config.top) as synth:
                final = JobStatus.ACCEPTED if synth.success else JobStatus.SYNTH_FAILED
        except ToolError as exc:
            result.entries.append(_error_entry(source_id, JobStatus.PORTED, exc))
            return result
        result.entries.append(
            LedgerEntry(
                source_id=source_id,
                status=final,
                error=None if synth.success else synth.log_excerpt,
                category=None if synth.success else 'synthesis_failed',
                payload={**payload, 'synthesizable': synth.success},
            ),
        )
        return result


def dataset_records(ledger: JobLedger, config: GlobalConfig) -> list[DatasetRecord]:
    """Records of every job that reached synthesis, ordered by source id.

    Raises:
        DuplicateRecordId: two ledger entries carry the same record id.
    """
    book = RecordBook()
    records: list[DatasetRecord] = []
    for source_id in sorted(ledger.entries):
        entry = ledger.entries[source_id]
        if entry.status not in (JobStatus.ACCEPTED, JobStatus.SYNTH_FAILED) or not entry.payload:
            continue
        synthesizable = entry.status is JobStatus.ACCEPTED
        records.append(
            DatasetRecord(
                record=book.add(TrainingRecord.model_validate(entry.payload['record'])),
                synthesizable=synthesizable,
                kept=synthesizable,
                variant=config.variant,
                pragmas=PragmaSummary.model_validate(entry.payload.get('pragmas') or {}),
            ),
        )
    return records


def summary_path_for(out: Path) -> Path:
    return out.with_name(f'{out.stem}.summary.json')


def run_dataset_build(
    corpus_dir: Path,
    out: Path,
    config: GlobalConfig,
    *,
    bridge: ToolBridge,
    templates: TemplateStore | None = None,
    eval_instructions: Sequence[str] | None = None,
) -> BuildSummary:
    """Build ``out`` (JSONL) from the Verilog files in *corpus_dir*.

    Writes ``<out>.ledger.jsonl`` as it goes and ``<out>.summary.json`` at
    the end. Jobs already terminal in the ledger are skipped, so a rerun
    over a finished ledger makes no external calls.
    """
    store = templates or TemplateStore(config.templates)
    jobs = collect_sources(corpus_dir)
    ledger = JobLedger(ledger_path_for(out))
    out.parent.mkdir(parents=True, exist_ok=True)
    builder = DatasetBuilder(config, bridge, store)
    summary = BuildSummary(sources=len(jobs))

    todo = [job for job in jobs if not ledger.status(job.verilog_source_id).terminal]
    summary.skipped = len(jobs) - len(todo)
    logger.info('dataset_build_started', sources=len(jobs), todo=len(todo), workers=config.workers)
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = [
            pool.submit(
                builder.run_job,
                job,
                ledger.status(job.verilog_source_id),
                ledger.payload(job.verilog_source_id),
            )
            for job in todo
        ]
        for job, future in zip(todo, futures, strict=True):
            try:
                entries = future.result().entries
            except Exception as exc:  # noqa: BLE001 - recorded against the job
                entries = [_crash_entry(job.verilog_source_id, ledger.status(job.verilog_source_id), exc)]
            for entry in entries:
                ledger.record(entry)
                if entry.error:
                    logger.warning(
                        'job_failed',
                        source=entry.source_id,
                        status=entry.status.value,
                        category=entry.category,
                    )

    records = dataset_records(ledger, config)
    if eval_instructions:
        records = filter_leakage(records, eval_instructions, config.leakage_threshold)
    write_jsonl(out, (r.to_row(store) for r in records))

    for job in jobs:
        summary.statuses[ledger.status(job.verilog_source_id).value] += 1
    summary.records = len(records)
    summary.kept = sum(r.kept for r in records)
    summary.dropped_leakage = sum(r.synthesizable and not r.kept for r in records)
    pragma_totals: dict[str, int] = {}
    for r in records:
        for name, count in r.pragmas.counts.items():
            pragma_totals[name] = pragma_totals.get(name, 0) + count
    summary.pragmas = dict(sorted(pragma_totals.items()))
    summary.external_calls = dict(sorted(bridge.calls.items()))
    write_text_utf8(summary_path_for(out), json.dumps(summary.model_dump(), indent=2, sort_keys=True) + '\n')
    logger.info('dataset_build_finished', records=summary.records, kept=summary.kept, **summary.statuses)
    return summary


def load_eval_instructions(path: Path) -> list[str]:
    """Eval-set instructions from JSONL rows (``instruction`` field) or ``---``-separated text blocks.

    Raises:
        EmptyInput: the file holds no instructions.
    """
    if path.suffix == '.jsonl':
        instructions = [str(row['instruction']).strip() for row in read_jsonl(path) if row.get('instruction')]
    else:
        blocks = re.split(r'^---\s*$', read_text_utf8(path), flags=re.MULTILINE)
        instructions = [block.strip() for block in blocks]
    instructions = [text for text in instructions if text]
    if not instructions:
        msg = f'{path}: no eval instructions found'
        raise EmptyInput(msg)
    return instructions


def run_dataset_filter(
    dataset: Path,
    eval_instructions: Sequence[str],
    threshold: float,
    *,
    templates: TemplateStore | None = None,
) -> list[DatasetRecord]:
    """Re-score an existing dataset file in place against *eval_instructions*.

    Raises:
        DuplicateRecordId: two rows carry the same record id.
    """
    book = RecordBook()
    records = [DatasetRecord.from_row(row) for row in read_jsonl(dataset)]
    for record in records:
        book.add(record.record)
    filtered = filter_leakage(records, eval_instructions, threshold)
    write_jsonl(dataset, (r.to_row(templates) for r in filtered))
    logger.info(
        'dataset_filtered',
        dataset=str(dataset),
        records=len(filtered),
        kept=sum(r.kept for r in filtered),
        threshold=threshold,
    )
    return filtered
