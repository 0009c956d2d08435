"""eval report / eval run."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from pathlib import Path

from hotlog import get_logger
from pydantic import BaseModel

from astkit.commands.common import bridge_for, emit, load
from astkit.console import console
from astkit.evalkit import DEFAULT_MODEL, AttemptOutcome, ProblemMeta, aggregate_report, parse_sim_log
from astkit.exceptions import EmptyInput, MalformedLogLine, ToolError
from astkit.toolbridge import ToolBridge
from astkit.utils import read_jsonl, read_text_utf8, write_jsonl

logger = get_logger(__name__)


class ReportFormat(str, Enum):
    JSON = 'json'
    TABLE = 'table'


def report_command(  # noqa: PLR0913 - mirrors the CLI flags
    outcomes: Path,
    problems: Path,
    *,
    k: Sequence[int] | None,
    tiers: tuple[int, int] | None,
    fmt: ReportFormat,
    models: Sequence[str] | None,
    matrix: bool,
    config_path: Path | None,
) -> int:
    config = load(config_path)
    report = aggregate_report(
        [AttemptOutcome.model_validate(row) for row in read_jsonl(outcomes)],
        [ProblemMeta.model_validate(row) for row in read_jsonl(problems)],
        models=models,
        k_set=k or config.k_set,
        boundaries=tiers or config.tiers,
    )
    if fmt is ReportFormat.JSON:
        emit(report.to_json())
    else:
        for table in report.tables(with_matrix=matrix):
            console.print(table)
    return 0


class AttemptJob(BaseModel):
    problem_id: str
    attempt_idx: int
    code_path: Path
    testbench_path: Path


def collect_attempts(attempts: Path, testbenches: Path) -> list[AttemptJob]:
    """``<attempts>/<problem>/<n>.cpp`` paired with ``<testbenches>/<problem>.v``, in (problem, n) order."""
    jobs = [
        AttemptJob(
            problem_id=code.parent.name,
            attempt_idx=int(code.stem),
            code_path=code,
            testbench_path=testbenches / f'{code.parent.name}.v',
        )
        for code in attempts.glob('*/*.cpp')
        if code.stem.isdigit() and int(code.stem) >= 1
    ]
    if not jobs:
        msg = f'{attempts}: no <problem>/<n>.cpp attempt files'
        raise EmptyInput(msg)
    return sorted(jobs, key=lambda j: (j.problem_id, j.attempt_idx))


def _tool_error(job: AttemptJob, stage: str, exc: ToolError) -> None:
    logger.warning(
        'attempt_tool_error',
        problem=job.problem_id,
        attempt=job.attempt_idx,
        stage=stage,
        category=exc.get_log_category(),
        error=str(exc),
    )


def run_attempt(job: AttemptJob, bridge: ToolBridge, top: str, model: str) -> AttemptOutcome:
    """Synthesize one attempt and, when it produces RTL, run the constrained testbench on it.

    A tool error during synthesis counts as failed synthesis; one during
    simulation keeps the synthesis verdict with no constraints counted.
    """
    failed = AttemptOutcome.from_counts(job.problem_id, job.attempt_idx, synth_ok=False, model=model)
    unchecked = AttemptOutcome.from_counts(job.problem_id, job.attempt_idx, synth_ok=True, model=model)
    try:
        with bridge.synthesize(read_text_utf8(job.code_path), top) as synth:
            if not synth.success:
                return failed
            try:
                sim = bridge.simulate(synth.rtl_path, read_text_utf8(job.testbench_path), top)
            except ToolError as exc:
                _tool_error(job, 'simulation', exc)
                return unchecked
    except ToolError as exc:
        _tool_error(job, 'synthesis', exc)
        return failed
    try:
        counts = parse_sim_log(sim.log_text)
    except MalformedLogLine as exc:
        logger.warning('attempt_log_rejected', problem=job.problem_id, attempt=job.attempt_idx, error=str(exc))
        return unchecked
    return AttemptOutcome.from_counts(
        job.problem_id,
        job.attempt_idx,
        synth_ok=True,
        constraints_total=counts.total,
        constraints_passed=counts.passed,
        model=model,
    )


def run_command(
    attempts: Path,
    testbenches: Path,
    out: Path,
    *,
    model: str | None,
    config_path: Path | None,
) -> int:
    config = load(config_path)
    bridge = bridge_for(config)
    jobs = collect_attempts(attempts, testbenches)
    name = model or DEFAULT_MODEL
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        outcomes = list(pool.map(lambda job: run_attempt(job, bridge, config.top, name), jobs))
    out.parent.mkdir(parents=True, exist_ok=True)
    write_jsonl(out, (o.model_dump(mode='json') for o in outcomes))
    logger.info(
        'eval_run_finished',
        attempts=len(outcomes),
        synth_ok=sum(o.synth_ok for o in outcomes),
        functional_ok=sum(o.functional_ok for o in outcomes),
    )
    console.print(f'[green]✓[/green] {out}: {len(outcomes)} outcomes')
    return 0
