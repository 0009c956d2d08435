from __future__ import annotations

from pathlib import Path

from hotlog import get_logger

from astkit.exceptions import SpawnFailure
from astkit.toolbridge.models import AdapterKind, SimResult, ToolAdapter
from astkit.toolbridge.sandbox import require_kind, run_command, run_mock, write_input
from astkit.utils import read_text_utf8

logger = get_logger(__name__)


def run_constrained_sim(
    rtl_path: Path | None,
    testbench: str,
    adapter: ToolAdapter,
    *,
    workdir: Path,
    top: str = 'top_module',
) -> SimResult:
    """Simulate *rtl_path* against *testbench* inside *workdir* and return the raw log.

    The log is not interpreted here; constraint lines are counted by
    :func:`astkit.evalkit.parse_sim_log`.

    Raises:
        SpawnFailure: the RTL file is missing or the simulator cannot start.
        ToolTimeout: the simulation outlived its timeout.
        WorkdirError: the testbench could not be written.
    """
    require_kind(adapter, AdapterKind.SIMULATION)
    if rtl_path is None or not rtl_path.is_file():
        msg = f'no RTL to simulate at {rtl_path}'
        raise SpawnFailure(msg)
    bench = write_input(workdir / 'testbench.v', testbench)
    if adapter.mock_mode:
        run = run_mock(adapter, f'{testbench}\n{read_text_utf8(rtl_path)}')
    else:
        values = {
            'input': str(bench),
            'testbench': str(bench),
            'rtl': str(rtl_path),
            'workdir': str(workdir),
            'top': top,
        }
        run = run_command(adapter, values, workdir)
    logger.info('simulation_finished', adapter=adapter.name, exit_code=run.exit_code)
    return SimResult(log_text=run.log, exit_ok=run.exit_code == 0, wall_time=run.wall_time)
