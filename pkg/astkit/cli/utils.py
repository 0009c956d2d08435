from collections.abc import Callable
from pathlib import Path
from typing import Annotated

from cyclopts import Parameter
from hotlog import configure_logging, get_logger, resolve_verbosity
from rich.markup import escape

from astkit.console import console
from astkit.exceptions import AstkitError

logger = get_logger(__name__)

ConfigOption = Annotated[
    Path | None,
    Parameter(name=['--config', '-c'], help='Toolkit config file (default: ./astkit.yaml when present).'),
]


def setup_logging(verbose: int) -> None:
    """Set up logging configuration for CLI commands.

    Args:
        verbose: Verbosity level (0=normal, 1=verbose, 2=debug)
    """
    verbosity = resolve_verbosity(verbose=verbose)
    configure_logging(verbosity=verbosity)


def int_list(text: str) -> list[int]:
    """``'1,5,10'`` -> ``[1, 5, 10]``."""
    return [int(part) for part in text.split(',') if part.strip()]


def run_cli_command(func: Callable[[], int]) -> None:
    """Execute a CLI command function, mapping domain errors to exit code 1.

    A non-zero exit code is surfaced via :class:`SystemExit`. Exceptions
    outside the :class:`AstkitError` hierarchy bubble up with a traceback.

    Args:
        func: A callable that takes no arguments and returns an exit code (int)
    """
    try:
        exit_code = func()
    except AstkitError as exc:
        logger.error('command_failed', category=exc.get_log_category(), error=str(exc))  # noqa: TRY400
        console.print(f'[red]error:[/red] {escape(str(exc))}')
        exit_code = 1
    if exit_code:
        raise SystemExit(exit_code)
