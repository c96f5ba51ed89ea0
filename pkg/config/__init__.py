"""
Configuration management for the simplex toolkit.

Loads settings from a YAML file (config/toolkit.yaml by default) and applies
environment variable overrides, including values from a local .env file.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

DEFAULT_CONFIG_PATH = Path(__file__).parent / "toolkit.yaml"

DEFAULTS: Dict[str, Any] = {
    "search": {"budget": 10_000_000},
    "campaign": {
        "grid": "2..3,1..3",
        "seed": 0,
        "pair_budget": 500,
        "full_pair_limit": 70,
        "flow_check_limit": 20,
        "workers": 1,
    },
    "embeddings": {"max_side": 6, "max_levels": 4},
    "logging": {"level": "WARNING", "dir": None},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ToolkitConfig:
    """
    Configuration manager for the toolkit.

    Loads configuration from YAML files and supports environment
    variable overrides for CI and batch runs.
    """

    ENV_OVERRIDES = {
        "SIMPLEX_SEARCH_BUDGET": ("search.budget", int),
        "SIMPLEX_PAIR_BUDGET": ("campaign.pair_budget", int),
        "SIMPLEX_SEED": ("campaign.seed", int),
        "SIMPLEX_WORKERS": ("campaign.workers", int),
        "SIMPLEX_GRID": ("campaign.grid", str),
        "SIMPLEX_LOG_LEVEL": ("logging.level", str),
        "SIMPLEX_LOG_DIR": ("logging.dir", str),
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to YAML configuration file.
                        If None, uses SIMPLEX_CONFIG or the bundled toolkit.yaml.
        """
        load_dotenv()
        explicit = config_path or os.getenv("SIMPLEX_CONFIG")
        self.config_path = Path(explicit) if explicit else DEFAULT_CONFIG_PATH
        self._required = explicit is not None
        self.config: Dict[str, Any] = {}
        self._load_config()
        self._apply_env_overrides()

    def _load_config(self):
        """Load configuration from YAML file on top of the built-in defaults."""
        if not self.config_path.exists():
            if self._required:
                raise FileNotFoundError(
                    f"Configuration file not found: {self.config_path}"
                )
            self.config = copy.deepcopy(DEFAULTS)
            return

        try:
            with open(self.config_path, "r") as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in config file: {e}")
        self.config = _merge(DEFAULTS, loaded)

    def _apply_env_overrides(self):
        """Apply environment variable overrides to configuration."""
        for env_name, (key, cast) in self.ENV_OVERRIDES.items():
            if raw := os.getenv(env_name):
                try:
                    self.set(key, cast(raw))
                except ValueError:
                    raise ValueError(f"Invalid value for {env_name}: {raw!r}")

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by dot notation key.

        Args:
            key: Configuration key in dot notation (e.g., "search.budget")
            default: Default value if key not found

        Returns:
            Configuration value or default

        Examples:
            >>> config.get("search.budget")
            10000000
        """
        value: Any = self.config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any):
        """
        Set configuration value by dot notation key.

        Examples:
            >>> config.set("campaign.seed", 7)
        """
        keys = key.split(".")
        config = self.config
        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]
        config[keys[-1]] = value

    def validate(self) -> bool:
        """
        Validate numeric configuration fields.

        Returns:
            True if configuration is valid

        Raises:
            ValueError: If a budget or limit is not a positive integer
        """
        positive_fields = [
            "search.budget",
            "campaign.pair_budget",
            "campaign.full_pair_limit",
            "campaign.workers",
            "embeddings.max_side",
            "embeddings.max_levels",
        ]
        invalid = [
            name for name in positive_fields
            if not isinstance(self.get(name), int) or self.get(name) < 1
        ]
        if invalid:
            raise ValueError(
                f"Configuration fields must be positive integers: {', '.join(invalid)}"
            )
        return True

    # Convenience properties for common config values

    @property
    def search_budget(self) -> int:
        return self.get("search.budget")

    @property
    def pair_budget(self) -> int:
        return self.get("campaign.pair_budget")

    @property
    def seed(self) -> int:
        return self.get("campaign.seed")

    @property
    def workers(self) -> int:
        return self.get("campaign.workers")

    @property
    def grid(self) -> str:
        return self.get("campaign.grid")

    @property
    def full_pair_limit(self) -> int:
        return self.get("campaign.full_pair_limit")

    @property
    def flow_check_limit(self) -> int:
        return self.get("campaign.flow_check_limit")

    @property
    def max_side(self) -> int:
        return self.get("embeddings.max_side")

    @property
    def max_levels(self) -> int:
        return self.get("embeddings.max_levels")

    @property
    def log_level(self) -> str:
        return self.get("logging.level", "WARNING")

    @property
    def log_dir(self) -> Optional[str]:
        return self.get("logging.dir")

    def to_dict(self) -> Dict[str, Any]:
        """Configuration as a dictionary copy."""
        return copy.deepcopy(self.config)

    def __repr__(self) -> str:
        return f"ToolkitConfig(path='{self.config_path}', budget={self.search_budget})"


_config: Optional[ToolkitConfig] = None


def get_config() -> ToolkitConfig:
    """Process-wide configuration, loaded on first use."""
    global _config
    if _config is None:
        _config = ToolkitConfig()
        _config.validate()
    return _config


def reset_config() -> None:
    """Drop the cached configuration (used by tests)."""
    global _config
    _config = None
