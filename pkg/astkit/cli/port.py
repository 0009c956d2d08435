from pathlib import Path

from cyclopts import App, Parameter
from pydantic import BaseModel, Field

from astkit.cli.utils import ConfigOption, run_cli_command

port_app = App(name='port', help='Port Verilog to HLS-C and augment testbenches through the LLM adapter.')


@Parameter(name='*')
class PortParams(BaseModel):
    """Parameters for port."""

    source: Path = Field(description='Verilog source file')
    config: ConfigOption = None


@Parameter(name='*')
class TestbenchParams(BaseModel):
    """Parameters for port testbench."""

    reference: Path = Field(description='Reference Verilog design')
    testbench: Path = Field(description='Existing testbench')
    instruction: Path = Field(description='Problem description text file')
    out: Path = Field(description='Where to write the augmented testbench')
    config: ConfigOption = None


@port_app.default
def port(params: PortParams) -> None:
    """Port one Verilog file; prints the HLS-C code and its instruction."""
    from astkit.commands.port import port_command  # noqa: PLC0415

    run_cli_command(lambda: port_command(params.source, config_path=params.config))


@port_app.command
def testbench(params: TestbenchParams) -> None:
    """Add CONSTRAINT PASS/FAIL checks to a testbench."""
    from astkit.commands.port import testbench_command  # noqa: PLC0415

    run_cli_command(
        lambda: testbench_command(
            params.reference,
            params.testbench,
            params.instruction,
            params.out,
            config_path=params.config,
        ),
    )
