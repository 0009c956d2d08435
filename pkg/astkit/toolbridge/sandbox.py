"""Run tool commands inside a fresh working directory, without a shell."""

from __future__ import annotations

import os
import re
import shlex
import subprocess
import tempfile
import time
from collections.abc import Callable, Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from hotlog import get_logger

from astkit.exceptions import SpawnFailure, ToolTimeout, WorkdirError
from astkit.toolbridge.models import PLACEHOLDERS, AdapterKind, MockRule, ToolAdapter
from astkit.utils import read_text_utf8, write_text_utf8

logger = get_logger(__name__)

_PLACEHOLDER = re.compile(r'\{(' + '|'.join(PLACEHOLDERS) + r')\}')
LOG_TAIL_LINES = 20


@dataclass(frozen=True)
class ToolRun:
    exit_code: int
    log: str
    wall_time: float
    produces_rtl: bool = True


@contextmanager
def make_workdir(adapter: ToolAdapter, root: Path | None = None) -> Iterator[Path]:
    """Fresh, empty working directory for one invocation.

    Removed when the block exits unless ``adapter.keep_workdir`` is set.

    Raises:
        WorkdirError: the directory could not be created.
    """
    temp: tempfile.TemporaryDirectory[str] | None = None
    try:
        if root is not None:
            root.mkdir(parents=True, exist_ok=True)
        if adapter.keep_workdir:
            workdir = Path(tempfile.mkdtemp(prefix=f'{adapter.name}-', dir=root))
        else:
            temp = tempfile.TemporaryDirectory(prefix=f'{adapter.name}-', dir=root, ignore_cleanup_errors=True)
            workdir = Path(temp.name)
    except OSError as exc:
        msg = f'cannot create a workdir for {adapter.name!r}: {exc}'
        raise WorkdirError(msg) from exc
    try:
        yield workdir
    finally:
        if temp is None:
            logger.debug('workdir_kept', adapter=adapter.name, workdir=str(workdir))
        else:
            temp.cleanup()


def write_input(path: Path, text: str) -> Path:
    """Write a tool input into its workdir.

    Raises:
        WorkdirError: the file could not be written.
    """
    try:
        write_text_utf8(path, text)
    except OSError as exc:
        msg = f'cannot write {path}: {exc}'
        raise WorkdirError(msg) from exc
    return path


def build_argv(template: str, values: Mapping[str, str]) -> list[str]:
    """Tokenize the template, then substitute placeholders inside each token."""
    posix = os.name != 'nt'

    def _sub(match: re.Match[str]) -> str:
        key = match.group(1)
        if key not in values:
            msg = f'placeholder {{{key}}} has no value for this invocation'
            raise SpawnFailure(msg)
        return values[key]

    return [_PLACEHOLDER.sub(_sub, token) for token in shlex.split(template, posix=posix)]


def log_tail(log: str, lines: int = LOG_TAIL_LINES) -> str:
    return '\n'.join(log.rstrip('\n').split('\n')[-lines:])


def run_command(adapter: ToolAdapter, values: Mapping[str, str], workdir: Path) -> ToolRun:
    """Execute the adapter command in *workdir*; stdout and stderr are merged into the log.

    Raises:
        ToolTimeout: the command outlived ``adapter.timeout``.
        SpawnFailure: the executable could not be started.
    """
    argv = build_argv(adapter.command_template, values)
    logger.info('tool_command', adapter=adapter.name, command=argv, cwd=str(workdir))
    started = time.perf_counter()
    try:
        completed = subprocess.run(  # noqa: S603 - argv list, never a shell
            argv,
            check=False,
            cwd=str(workdir),
            env={**os.environ, **adapter.env},
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
            text=True,
            encoding='utf-8',
            errors='replace',
            timeout=adapter.timeout,
        )
    except subprocess.TimeoutExpired as exc:
        msg = f'{adapter.name} exceeded {adapter.timeout}s'
        raise ToolTimeout(msg) from exc
    except OSError as exc:
        msg = f'cannot start {argv[0] if argv else "<empty command>"}: {exc}'
        raise SpawnFailure(msg) from exc
    log = completed.stdout or ''
    if adapter.log_file and (workdir / adapter.log_file).is_file():
        log += read_text_utf8(workdir / adapter.log_file)
    return ToolRun(exit_code=completed.returncode, log=log, wall_time=time.perf_counter() - started)


def select_rule(rules: list[MockRule], text: str) -> MockRule:
    for rule in rules:
        if not rule.pattern or re.search(rule.pattern, text, re.MULTILINE):
            return rule
    return MockRule()


def run_mock(adapter: ToolAdapter, text: str, *, sleep: Callable[[float], None] = time.sleep) -> ToolRun:
    """Answer from the first matching mock rule; a rule that sleeps past the timeout times out."""
    rule = select_rule(adapter.mock_rules, text)
    if rule.sleep:
        sleep(min(rule.sleep, adapter.timeout))
    if rule.sleep > adapter.timeout:
        msg = f'{adapter.name} (mock) exceeded {adapter.timeout}s'
        raise ToolTimeout(msg)
    logger.debug('mock_tool_run', adapter=adapter.name, pattern=rule.pattern, exit_code=rule.exit_code)
    return ToolRun(exit_code=rule.exit_code, log=rule.log, wall_time=rule.sleep, produces_rtl=rule.rtl)


def require_kind(adapter: ToolAdapter, kind: AdapterKind) -> None:
    if adapter.kind is not kind:
        msg = f'adapter {adapter.name!r} is a {adapter.kind.value} adapter, not {kind.value}'
        raise SpawnFailure(msg)
