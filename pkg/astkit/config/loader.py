from __future__ import annotations

import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import yaml
from hotlog import get_logger
from pydantic import ValidationError

from astkit.config.models import DEFAULT_CONFIG_FILE, GlobalConfig
from astkit.exceptions import ConfigError, ConfigValidationError

logger = get_logger(__name__)

ENV_PREFIX = 'ASTKIT_'
ENV_FIELDS = ('workers', 'seed', 'leakage_threshold', 'top', 'retries', 'variant', 'with_cfg', 'k_set')


def env_overrides(environ: Mapping[str, str] | None = None) -> dict[str, Any]:
    """Scalar top-level settings from ``ASTKIT_<FIELD>`` variables."""
    environ = os.environ if environ is None else environ
    overrides: dict[str, Any] = {}
    for field in ENV_FIELDS:
        raw = environ.get(f'{ENV_PREFIX}{field.upper()}')
        if raw is None:
            continue
        overrides[field] = [part.strip() for part in raw.split(',') if part.strip()] if field == 'k_set' else raw
    return overrides


def _resolve_paths(data: dict[str, Any], base: Path) -> None:
    """Make template overrides and fixture manifests relative to the config file."""
    templates = data.get('templates') or {}
    data['templates'] = {name: str(base / path) for name, path in templates.items()}
    for adapter in data.get('adapters') or []:
        if isinstance(adapter, dict) and adapter.get('fixtures'):
            adapter['fixtures'] = str(base / adapter['fixtures'])


def load_config(path: Path | None = None, *, environ: Mapping[str, str] | None = None) -> GlobalConfig:
    """Load the YAML config, apply environment overrides and validate.

    Without an explicit *path*, ``astkit.yaml`` in the working directory is
    used when present; otherwise the built-in offline defaults apply.

    Raises:
        ConfigError: an explicit config file does not exist or is not YAML.
        ConfigValidationError: the values fail validation.
    """
    data: dict[str, Any] = {}
    if path is None and Path(DEFAULT_CONFIG_FILE).is_file():
        path = Path(DEFAULT_CONFIG_FILE)
    if path is not None:
        if not path.is_file():
            msg = f'config file not found: {path}'
            raise ConfigError(msg)
        try:
            with path.open(encoding='utf-8') as fh:
                data = yaml.safe_load(fh) or {}
        except yaml.YAMLError as exc:
            msg = f'{path} is not valid YAML: {exc}'
            raise ConfigError(msg) from exc
        if not isinstance(data, dict):
            msg = f'{path} must contain a mapping at the top level'
            raise ConfigValidationError(msg)
        _resolve_paths(data, path.parent)
    data.update(env_overrides(environ))
    try:
        config = GlobalConfig.model_validate(data)
    except ValidationError as exc:
        msg = f'invalid configuration{f" in {path}" if path else ""}: {exc}'
        raise ConfigValidationError(msg) from exc
    config.config_file = path
    logger.debug('config_loaded', path=str(path) if path else None, adapters=[a.name for a in config.adapters])
    return config
