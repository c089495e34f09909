# (C) 2026 kdyck contributors
import logging
import os
from pathlib import Path
from typing import Any, Optional

import yaml

DEFAULT_MAX_STEPS = 24
DEFAULT_MAX_POLY_PATHS = 10**6
DEFAULT_VERIFY_HARD_CAP = 16

ENV_PREFIX = "KDYCK_"
CONF_KEYS = ("max_steps", "max_poly_paths", "verify_hard_cap")

logger = logging.getLogger(__name__)


class KDyckConfig:
    """Size caps shared by the enumeration, polynomial and verify commands.

    Values are resolved from the built-in defaults, then an optional YAML
    file, then the KDYCK_MAX_STEPS, KDYCK_MAX_POLY_PATHS and
    KDYCK_VERIFY_HARD_CAP environment variables.
    """

    def __init__(
        self,
        max_steps: int = DEFAULT_MAX_STEPS,
        max_poly_paths: int = DEFAULT_MAX_POLY_PATHS,
        verify_hard_cap: int = DEFAULT_VERIFY_HARD_CAP,
    ):
        self.max_steps = max_steps
        self.max_poly_paths = max_poly_paths
        self.verify_hard_cap = verify_hard_cap

    @staticmethod
    def _load_conf(path: Path) -> dict[str, Any]:
        with open(path, "r") as conf:
            return yaml.safe_load(conf) or {}

    @staticmethod
    def _positive_int(name: str, value: Any, source: str) -> int:
        if isinstance(value, bool):
            raise RuntimeError(f'"{name}" from {source} must be an integer.')
        try:
            number = int(value)
        except (TypeError, ValueError):
            raise RuntimeError(f'"{name}" from {source} must be an integer.')
        if number < 1:
            raise RuntimeError(f'"{name}" from {source} must be positive.')
        return number

    @classmethod
    def load(cls, conf_path: Optional[Path] = None) -> "KDyckConfig":
        """Builds the configuration from the optional file and environment."""
        config = cls()

        if conf_path is not None:
            if not os.path.exists(conf_path):
                raise RuntimeError("Invalid path to configuration file given.")
            conf = cls._load_conf(conf_path)
            if not isinstance(conf, dict):
                raise RuntimeError(f"Configuration in {conf_path} must be a mapping.")
            unknown = set(conf) - set(CONF_KEYS)
            if unknown:
                raise RuntimeError(
                    f"Unknown configuration keys in {conf_path}: {sorted(unknown)}."
                )
            for key, value in conf.items():
                setattr(config, key, cls._positive_int(key, value, str(conf_path)))
            logger.debug(f"Loaded configuration from {conf_path}.")

        for key in CONF_KEYS:
            env_name = ENV_PREFIX + key.upper()
            env_value = os.environ.get(env_name)
            if env_value:
                setattr(config, key, cls._positive_int(key, env_value, env_name))
                logger.debug(f"Using {env_name}={env_value}.")

        return config

    def __repr__(self) -> str:
        return (
            f"KDyckConfig(max_steps={self.max_steps}, "
            f"max_poly_paths={self.max_poly_paths}, "
            f"verify_hard_cap={self.verify_hard_cap})"
        )
