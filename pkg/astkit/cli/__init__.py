"""Command-line interface for astkit.

The CLI layer stays thin: each module under ``astkit/cli`` declares a
pydantic parameter model and a cyclopts command that hands off to the
matching ``astkit.commands`` function through ``run_cli_command``, which
turns domain errors into exit code 1. ``main.py`` owns the app, the
logging setup and the mapping of usage errors to exit code 2.
"""
