from pathlib import Path
from typing import Annotated

from cyclopts import App, Parameter
from pydantic import BaseModel, Field, field_validator

from astkit.cli.utils import ConfigOption, int_list, run_cli_command
from astkit.commands.evaluate import ReportFormat

eval_app = App(name='eval', help='Score generated attempts: synth@k, pass@k and difficulty tiers.')


@Parameter(name='*')
class ReportParams(BaseModel):
    """Parameters for eval report."""

    outcomes: Path = Field(description='AttemptOutcome JSON-lines file')
    problems: Path = Field(description='ProblemMeta JSON-lines file')
    k: str | None = Field(default=None, description='Comma-separated k values (default from config: 1,5,10)')
    tiers: str | None = Field(default=None, description='Explicit tier boundaries "b1,b2" in characters')
    fmt: Annotated[ReportFormat, Parameter(name='--format')] = Field(
        default=ReportFormat.JSON,
        description='Output format',
    )
    models: str | None = Field(default=None, description='Comma-separated models to report (default: all)')
    matrix: bool = Field(default=False, description='Add per-problem ✓/✗ tables to the table output')
    config: ConfigOption = None

    @field_validator('k', 'tiers')
    @classmethod
    def _integers(cls, value: str | None) -> str | None:
        if value is not None:
            int_list(value)
        return value

    def k_values(self) -> list[int] | None:
        return int_list(self.k) if self.k else None

    def boundaries(self) -> tuple[int, int] | None:
        if not self.tiers:
            return None
        low, high = int_list(self.tiers)
        return low, high

    def model_names(self) -> list[str] | None:
        return [m.strip() for m in self.models.split(',') if m.strip()] if self.models else None


@Parameter(name='*')
class RunParams(BaseModel):
    """Parameters for eval run."""

    attempts: Path = Field(description='Directory laid out as <problem>/<n>.cpp')
    testbenches: Path = Field(description='Directory of constrained testbenches <problem>.v')
    out: Path = Field(description='AttemptOutcome JSON-lines file to write')
    model: str | None = Field(default=None, description='Model name recorded in each outcome')
    config: ConfigOption = None


@eval_app.command
def report(params: ReportParams) -> None:
    """Aggregate outcomes into overall and per-tier synth@k / pass@k."""
    from astkit.commands.evaluate import report_command  # noqa: PLC0415

    run_cli_command(
        lambda: report_command(
            params.outcomes,
            params.problems,
            k=params.k_values(),
            tiers=params.boundaries(),
            fmt=params.fmt,
            models=params.model_names(),
            matrix=params.matrix,
            config_path=params.config,
        ),
    )


@eval_app.command
def run(params: RunParams) -> None:
    """Synthesize and simulate every attempt, writing one outcome per attempt."""
    from astkit.commands.evaluate import run_command  # noqa: PLC0415

    run_cli_command(
        lambda: run_command(
            params.attempts,
            params.testbenches,
            params.out,
            model=params.model,
            config_path=params.config,
        ),
    )
