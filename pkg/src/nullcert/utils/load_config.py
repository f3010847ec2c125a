#!/usr/bin/env python3

import os
import json
from typing import Any, Dict, Optional

from pydantic import ValidationError

try:
    # Python 3.11+ 标准库
    import tomllib as toml  # type: ignore
    _TOML_NEEDS_BINARY_FILE = True
except ModuleNotFoundError:
    try:
        import tomli as toml  # type: ignore
        _TOML_NEEDS_BINARY_FILE = True
    except ModuleNotFoundError:
        # 第三方 toml 库（文本文件）
        import toml  # type: ignore
        _TOML_NEEDS_BINARY_FILE = False

from ..errors import ConfigError
from ..schemas.settings import Settings


ENV_OVERRIDES = {
    "NULLCERT_ENUM_CAP": "enumeration_cap",
    "NULLCERT_DMAX": "default_dmax",
    "NULLCERT_LOG_LEVEL": "log_level",
}


def load_config_by_file(path: str) -> Dict[str, Any]:
    """Read a TOML or JSON settings file.

    A ``[nullcert]`` table is used when present, otherwise the top level.

    Args:
        path: File path; ``.toml`` is read as TOML, anything else as JSON.

    Returns:
        Dict[str, Any]: Raw settings mapping.
    """
    try:
        if path.endswith('.toml'):
            if _TOML_NEEDS_BINARY_FILE:
                with open(path, 'rb') as f:
                    config = toml.load(f)
            else:
                with open(path, 'r', encoding='utf-8') as f:
                    config = toml.load(f)
        else:
            with open(path, 'r', encoding='utf-8') as f:
                config = json.load(f)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read settings file {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigError(f"settings file {path} must hold a table")
    section = config.get("nullcert", config)
    return dict(section) if isinstance(section, dict) else {}


def load_settings(path: Optional[str] = None) -> Settings:
    """File values, then ``NULLCERT_*`` environment overrides, then validation.

    Args:
        path: Optional TOML/JSON settings file.

    Returns:
        Settings: Validated settings.

    Raises:
        ConfigError: Unreadable file or invalid values.
    """
    values: Dict[str, Any] = load_config_by_file(path) if path else {}
    for env_name, key in ENV_OVERRIDES.items():
        env_value = os.getenv(env_name)
        if env_value:
            values[key] = env_value
    try:
        return Settings(**values)
    except ValidationError as exc:
        raise ConfigError(f"invalid settings: {exc.errors()[0]['msg']}") from exc
