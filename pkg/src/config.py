"""Configuration management for parkext.

This module stores the size guards and the worker count used by the engines.

Behavior:
- If the config file does not exist, it is created with the defaults in
  `parkext.utils.constants.CONFIG_DEFAULTS`.
- If the config file exists, it is read and a dictionary is returned.
- `PARKEXT_*` environment variables override values read from the file.
"""

import os
import sys

import yaml

from parkext.utils.constants import CONFIG_DEFAULTS, ENV_VARIABLES
from parkext.utils.core import PrettyDict, _ensure_parkext_folder

CONFIG_YML_LOCATION = _ensure_parkext_folder() / "config.yml"

__all__ = ["get_value", "set_value", "resolve", "CONFIG_YML_LOCATION"]


def _ensure_config_file_exists() -> None:
    """Ensure the configuration file exists; create with defaults if missing."""

    if not os.path.isfile(CONFIG_YML_LOCATION):
        os.makedirs(os.path.dirname(CONFIG_YML_LOCATION), exist_ok=True)
        with open(CONFIG_YML_LOCATION, "w") as file:
            yaml.safe_dump(dict(CONFIG_DEFAULTS), file, default_flow_style=False)


def _supports_unicode_output() -> bool:
    """Return True if stdout likely supports Unicode glyphs."""

    encoding: str | None = getattr(sys.stdout, "encoding", None)
    if not encoding:
        return False
    return "utf" in encoding.lower()


def get_value() -> dict:
    """Get the configuration values.

    Creates the file with defaults if it doesn't exist, then returns a dict
    with one integer entry per key of `CONFIG_DEFAULTS`.

    Returns:
        A dictionary of guard values.
    """

    _ensure_config_file_exists()

    with open(CONFIG_YML_LOCATION, "r") as file:
        data = yaml.safe_load(file) or {}

    values = {key: int(data.get(key, default)) for key, default in CONFIG_DEFAULTS.items()}

    # env variables override config file
    for key, variable in ENV_VARIABLES.items():
        if variable in os.environ:
            values[key] = int(os.environ[variable])

    return PrettyDict(values)


def resolve(key: str, value: int | None = None) -> int:
    """Return `value` if given, else the configured value for `key`.

    This is what every engine calls to read a guard, so that an explicit
    keyword argument always wins over the file and the environment.
    """
    if value is not None:
        return value
    if key not in CONFIG_DEFAULTS:
        raise ValueError(f"{key} is not a valid configuration key")
    try:
        return get_value()[key]
    except OSError:
        # read-only home directories still get the defaults
        return int(os.environ.get(ENV_VARIABLES[key], CONFIG_DEFAULTS[key]))


def set_value(key: str, value) -> None:
    """Set a configuration value.

    Args:
        key: Configuration key to set (one of `CONFIG_DEFAULTS`).
        value: Value to set. Coerced to int.
    """

    if key not in CONFIG_DEFAULTS:
        raise ValueError(
            f"{key} is not a valid configuration key. Supported keys are: "
            + ", ".join(CONFIG_DEFAULTS)
        )

    _ensure_config_file_exists()

    with open(CONFIG_YML_LOCATION, "r") as file:
        data = yaml.safe_load(file) or {}

    data[key] = int(value)

    with open(CONFIG_YML_LOCATION, "w") as file:
        yaml.safe_dump(data, file, default_flow_style=False)

    # Prefer Unicode on capable terminals; fall back to ASCII-safe symbols
    if _supports_unicode_output():
        check, arrow = "✔︎", "→"
    else:
        check, arrow = "OK", "->"
    print(f"{check} {key} {arrow} {value}")
