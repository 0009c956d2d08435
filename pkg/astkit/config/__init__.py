from astkit.config.loader import ENV_PREFIX, env_overrides, load_config
from astkit.config.models import DEFAULT_CONFIG_FILE, GlobalConfig, default_adapters

__all__ = [
    'DEFAULT_CONFIG_FILE',
    'ENV_PREFIX',
    'GlobalConfig',
    'default_adapters',
    'env_overrides',
    'load_config',
]
