"""In-process runner for the astkit CLI, used by the test suite.

``CliRunner().invoke(app, [...])`` runs the meta app with stdout redirected
to a buffer. The shared rich console writes to whatever ``sys.stdout`` is at
print time, so tables and status lines land in the same buffer as the
machine output.
"""

import io
import sys
from dataclasses import dataclass

import cyclopts
from rich.console import Console


@dataclass
class Result:
    exit_code: int
    output: str
    exception: BaseException | None = None


class CliRunner:
    def invoke(
        self,
        app: cyclopts.App,
        args: list[str] | tuple[str, ...] = (),
        *,
        catch_exceptions: bool = True,
    ) -> Result:
        """Run *app* with *args*; ``SystemExit`` becomes ``exit_code``.

        Args:
            app: The cyclopts application (its meta app is used when defined).
            args: Arguments as they would follow the program name.
            catch_exceptions: Re-raise anything other than ``SystemExit`` when False.

        Returns:
            The exit code, the captured output and any caught exception.
        """
        buf = io.StringIO()
        cyclopts_console = Console(file=buf, force_terminal=False, soft_wrap=True, width=200)
        saved = sys.stdout, app.console, app.error_console
        exit_code = 0
        exception: BaseException | None = None
        try:
            sys.stdout = buf
            app.console = app.error_console = cyclopts_console
            entry = app.meta if app.meta.default_command is not None else app
            entry(list(args))
        except SystemExit as exc:
            exit_code = exc.code if isinstance(exc.code, int) else 0
        except BaseException as exc:
            if not catch_exceptions:
                raise
            exception, exit_code = exc, 1
        finally:
            sys.stdout, app.console, app.error_console = saved
        return Result(exit_code=exit_code, output=buf.getvalue(), exception=exception)
