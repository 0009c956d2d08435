from pathlib import Path

import pytest

from astkit.config.loader import ENV_FIELDS, ENV_PREFIX


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    """Run every test from an empty directory with no ``ASTKIT_*`` overrides.

    ``load_config`` falls back to ``./astkit.yaml`` and the environment, so
    neither may leak in from the developer's shell.
    """
    for field in ENV_FIELDS:
        monkeypatch.delenv(f'{ENV_PREFIX}{field.upper()}', raising=False)
    workdir = tmp_path / 'cwd'
    workdir.mkdir()
    monkeypatch.chdir(workdir)
    return workdir
