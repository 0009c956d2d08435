from __future__ import annotations

from pathlib import Path

from hotlog import get_logger

from astkit.toolbridge.models import AdapterKind, SynthResult, ToolAdapter
from astkit.toolbridge.sandbox import ToolRun, log_tail, require_kind, run_command, run_mock, write_input
from astkit.utils import write_text_utf8

logger = get_logger(__name__)


def _mock_rtl(workdir: Path, top: str, hls_code: str) -> None:
    rtl_dir = workdir / 'rtl'
    rtl_dir.mkdir()
    # mock RTL embeds the source so simulation rules can match on it
    body = '\n'.join(f'// {line}' for line in hls_code.splitlines())
    write_text_utf8(rtl_dir / f'{top}.v', f'// mock RTL for {top}\n{body}\nmodule {top}();\nendmodule\n')


def first_failure_pattern(log: str, patterns: list[str]) -> str | None:
    return next((p for p in patterns if p in log), None)


def run_synthesis(hls_code: str, top: str, adapter: ToolAdapter, *, workdir: Path) -> SynthResult:
    """Synthesize *hls_code* with *top* as the entry function inside *workdir*.

    Success requires exit status 0, no configured failure pattern in the
    log and at least one RTL file matching ``adapter.rtl_glob``. The RTL
    path points into *workdir* and lives as long as it does.

    Raises:
        ToolTimeout: the tool outlived its timeout.
        SpawnFailure: the tool could not be started.
        WorkdirError: the sandbox could not be prepared.
    """
    require_kind(adapter, AdapterKind.SYNTHESIS)
    source = write_input(workdir / f'{top}.cpp', hls_code)

    run: ToolRun
    if adapter.mock_mode:
        run = run_mock(adapter, hls_code)
        if run.exit_code == 0 and run.produces_rtl:
            _mock_rtl(workdir, top, hls_code)
    else:
        run = run_command(adapter, {'input': str(source), 'workdir': str(workdir), 'top': top}, workdir)

    pattern = first_failure_pattern(run.log, adapter.failure_patterns)
    rtl = next(iter(sorted(workdir.glob(adapter.rtl_glob))), None)
    success = run.exit_code == 0 and pattern is None and rtl is not None
    logger.info(
        'synthesis_finished',
        adapter=adapter.name,
        top=top,
        success=success,
        exit_code=run.exit_code,
        failure_pattern=pattern,
    )
    return SynthResult(
        success=success,
        log_excerpt=log_tail(run.log),
        rtl_path=rtl if success else None,
        wall_time=run.wall_time,
        failure_pattern=pattern,
    )
