from pathlib import Path

from cyclopts import App, Parameter
from pydantic import BaseModel, Field

from astkit.cli.utils import ConfigOption, run_cli_command

dataset_app = App(name='dataset', help='Build and filter the fine-tuning dataset.')


@Parameter(name='*')
class BuildParams(BaseModel):
    """Parameters for dataset build."""

    corpus: Path = Field(description='Directory of Verilog sources (.v, .sv)')
    out: Path = Field(description='Dataset JSON-lines file to write')
    eval_instructions: Path | None = Field(
        default=None,
        description='Eval instructions (JSONL or ---separated text) for the leakage filter',
    )
    config: ConfigOption = None


@Parameter(name='*')
class FilterParams(BaseModel):
    """Parameters for dataset filter."""

    dataset: Path = Field(description='Dataset JSON-lines file, rewritten in place')
    eval_instructions: Path = Field(description='Eval instructions (JSONL or ---separated text)')
    threshold: float | None = Field(default=None, description='Drop records scoring at or above this')
    config: ConfigOption = None


@dataset_app.command
def build(params: BuildParams) -> None:
    """Port, parse, synthesize and serialize every Verilog file of a corpus."""
    from astkit.commands.dataset import build_command  # noqa: PLC0415

    run_cli_command(
        lambda: build_command(
            params.corpus,
            params.out,
            eval_instructions=params.eval_instructions,
            config_path=params.config,
        ),
    )


@dataset_app.command(name='filter')
def filter_(params: FilterParams) -> None:
    """Re-score a dataset against eval instructions and update ``kept``."""
    from astkit.commands.dataset import filter_command  # noqa: PLC0415

    run_cli_command(
        lambda: filter_command(
            params.dataset,
            params.eval_instructions,
            threshold=params.threshold,
            config_path=params.config,
        ),
    )
