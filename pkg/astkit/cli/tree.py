from pathlib import Path
from typing import Annotated

from cyclopts import Parameter
from pydantic import BaseModel, Field

from astkit.cli.utils import ConfigOption, run_cli_command
from astkit.commands.tree import CfgFormat
from astkit.serialize import TrainingVariant


class _TreeParams(BaseModel):
    source: Path = Field(description='HLS-C source file (.c, .cpp, .h)')
    top: str | None = Field(default=None, description='Restrict output to this function')


@Parameter(name='*')
class ParseParams(_TreeParams):
    """Parameters for the parse command."""

    dump_json: bool = Field(default=False, description='Print the tree as JSON instead of source text')


@Parameter(name='*')
class OptimizeParams(_TreeParams):
    """Parameters for the optimize command."""

    dump_json: bool = Field(default=False, description='Print the tree as JSON instead of source text')
    config: ConfigOption = None


@Parameter(name='*')
class CfgParams(_TreeParams):
    """Parameters for the cfg command."""

    fmt: Annotated[CfgFormat, Parameter(name='--format')] = Field(
        default=CfgFormat.DOT,
        description='Output format',
    )
    config: ConfigOption = None


@Parameter(name='*')
class SerializeParams(_TreeParams):
    """Parameters for the serialize command."""

    indent: bool = Field(default=False, description='Indent nested statements by depth')
    with_cfg: bool = Field(default=False, description='Append the DOT control-flow graph')
    instruction: str | None = Field(default=None, description='Render a full training record with this instruction')
    variant: TrainingVariant | None = Field(default=None, description='Training record variant (ast or text)')
    config: ConfigOption = None


def parse(params: ParseParams) -> None:
    """Parse an HLS-C file and print it back, or dump its tree as JSON."""
    from astkit.commands.tree import parse_command  # noqa: PLC0415

    run_cli_command(lambda: parse_command(params.source, top=params.top, dump_json=params.dump_json))


def optimize(params: OptimizeParams) -> None:
    """Remove comments and includes and collapse redundant wrappers."""
    from astkit.commands.tree import optimize_command  # noqa: PLC0415

    run_cli_command(
        lambda: optimize_command(
            params.source,
            top=params.top,
            dump_json=params.dump_json,
            config_path=params.config,
        ),
    )


def cfg(params: CfgParams) -> None:
    """Extract the control-flow graph of a function (default: the configured top)."""
    from astkit.commands.tree import cfg_command  # noqa: PLC0415

    run_cli_command(lambda: cfg_command(params.source, top=params.top, fmt=params.fmt, config_path=params.config))


def serialize(params: SerializeParams) -> None:
    """Print the serialized AST of a function (default: the configured top)."""
    from astkit.commands.tree import serialize_command  # noqa: PLC0415

    run_cli_command(
        lambda: serialize_command(
            params.source,
            top=params.top,
            indent=params.indent,
            with_cfg=params.with_cfg,
            instruction=params.instruction,
            variant=params.variant,
            config_path=params.config,
        ),
    )
