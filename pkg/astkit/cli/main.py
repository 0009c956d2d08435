"""Main astkit CLI application."""

from typing import Annotated

import cyclopts
from cyclopts import CycloptsError, Parameter

from astkit.cli.dataset import dataset_app
from astkit.cli.evaluate import eval_app
from astkit.cli.port import port_app
from astkit.cli.tree import cfg, optimize, parse, serialize
from astkit.cli.utils import setup_logging
from astkit.templates import TemplateStore
from astkit.version import __version__


def version_text() -> str:
    """Toolkit version followed by the version of each bundled template."""
    templates = ', '.join(f'{name} v{version}' for name, version in TemplateStore().versions().items())
    return f'astkit {__version__} (templates: {templates})'


app = cyclopts.App(
    name='astkit',
    version=version_text,
    help='astkit - HLS-C syntax trees, control-flow graphs and LLM dataset tooling.',
)


@app.meta.default
def _meta(
    *tokens: Annotated[str, Parameter(show=False, allow_leading_hyphen=True)],
    verbose: Annotated[
        int,
        Parameter(
            name=['-v', '--verbose'],
            count=True,
            help='Increase verbosity (-v, -vv).',
        ),
    ] = 0,
) -> None:
    """astkit - HLS-C syntax trees, control-flow graphs and LLM dataset tooling."""
    setup_logging(verbose)
    try:
        app(tokens, exit_on_error=False)
    except CycloptsError:
        # cyclopts has already printed the error and help
        raise SystemExit(2) from None


app.command()(parse)
app.command()(optimize)
app.command()(cfg)
app.command()(serialize)
app.command(dataset_app)
app.command(eval_app)
app.command(port_app)
