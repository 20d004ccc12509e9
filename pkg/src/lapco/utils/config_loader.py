# src/lapco/utils/config_loader.py
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import toml

logger = logging.getLogger(__name__)

HARD_MAX_N = 12
MAX_N_ENV = "LAPCO_MAX_N"


class ConfigError(Exception):
    """Error during configuration loading or parsing."""
    pass


def load_toml(file_path: Path) -> Dict[str, Any]:
    """
    Loads and parses a TOML file.

    Args:
        file_path: Path to the TOML file.

    Returns:
        Dictionary with data from the file.

    Raises:
        FileNotFoundError: If the file is not found.
        ConfigError: If a TOML parsing error occurred.
    """
    if not file_path.is_file():
        raise FileNotFoundError(f"Configuration file not found: {file_path}")

    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return toml.load(f)
    except toml.TomlDecodeError as e:
        raise ConfigError(f"Error parsing TOML file {file_path}: {e}") from e
    except IOError as e:
        raise ConfigError(f"Error reading file {file_path}: {e}") from e


@dataclass(frozen=True)
class LabSettings:
    """Values of the [config] section of a lab profile."""
    log_level: str = "INFO"
    workers: int = 1
    max_n: int = HARD_MAX_N

    @classmethod
    def from_mapping(cls, config: Dict[str, Any]) -> 'LabSettings':
        log_level = str(config.get("log_level", cls.log_level)).upper()
        try:
            workers = int(config.get("workers", cls.workers))
            max_n = int(config.get("max_n", cls.max_n))
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid numeric value in [config]: {e}") from e
        if workers < 1:
            raise ConfigError(f"'workers' must be at least 1, got {workers}")
        if max_n < 3:
            raise ConfigError(f"'max_n' must be at least 3, got {max_n}")
        return cls(log_level=log_level, workers=workers, max_n=min(max_n, HARD_MAX_N))


def enumeration_limit(requested: Optional[int] = None) -> int:
    """
    Effective enumeration guard: the hard limit, lowered by `requested`
    and by the LAPCO_MAX_N environment variable. Nothing raises it.
    """
    limit = HARD_MAX_N
    if requested is not None:
        limit = min(limit, requested)
    raw = os.environ.get(MAX_N_ENV)
    if raw:
        try:
            limit = min(limit, int(raw))
        except ValueError:
            logger.warning(f"Ignoring invalid {MAX_N_ENV}={raw!r} (expected an integer).")
    return limit
