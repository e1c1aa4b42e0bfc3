"""
Configuration Manager for rankforge

Loads and saves run settings as JSON. The enumeration cap resolves as
--cap flag > RANKFORGE_CAP (environment or .env) > config file > default.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from core.constants import CAP_ENV_VAR, DEFAULT_CHUNK_SIZE, DEFAULT_ENUMERATION_CAP
from core.errors import FormatError
from utils.logger import get_logger
from utils.paths import CONFIGS_DIR, get_data_path


class ConfigManager:
    """Manages rankforge configuration"""

    def __init__(self, config_dir: Optional[Path] = None, env_file: Optional[Path] = None):
        """
        Initialize configuration manager

        Args:
            config_dir: Directory holding named configuration files
            env_file: Explicit .env file; the nearest .env is used when omitted
        """
        self.config_dir = Path(config_dir) if config_dir is not None else CONFIGS_DIR
        self.logger = get_logger()
        if env_file is not None:
            load_dotenv(env_file, override=False)
        else:
            load_dotenv(override=False)

        # Default configuration template
        self.default_config = {
            # Enumeration
            "enumeration_cap": DEFAULT_ENUMERATION_CAP,
            "chunk_size": DEFAULT_CHUNK_SIZE,

            # Construction defaults
            "variant": "c1",
            "pq_choice": "a",

            # Logging
            "log_level": "WARNING",
            "log_to_file": False,
        }
        self.config: Dict[str, Any] = self.default_config.copy()

    def _resolve(self, filename: str) -> Path:
        filepath = Path(filename)
        if not filepath.is_absolute() and filepath.parent == Path("."):
            filepath = self.config_dir / filepath
        elif not filepath.is_absolute():
            filepath = get_data_path(str(filepath))
        if filepath.suffix != ".json":
            filepath = filepath.with_suffix(".json")
        return filepath

    def save_config(self, filename: str, config: Optional[Dict[str, Any]] = None) -> Path:
        """
        Save configuration to JSON file

        Args:
            filename: Full path or name of the configuration file
            config: Configuration to save (defaults to the active one)

        Returns:
            Path: The written file
        """
        filepath = self._resolve(filename)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(self.config if config is None else config, f, indent=4, sort_keys=True)
        self.logger.info(f"Configuration saved to {filepath}")
        return filepath

    def load_config(self, filename: str) -> Dict[str, Any]:
        """
        Load configuration from JSON file and merge it over the defaults

        Raises:
            FileNotFoundError: No such configuration
            FormatError: The file is not a JSON object
        """
        filepath = self._resolve(filename)
        if not filepath.exists():
            raise FileNotFoundError(f"Configuration file not found: {filepath}")
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                loaded = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(f"Configuration {filepath} is not valid JSON: {e}") from e
        if not isinstance(loaded, dict):
            raise FormatError(f"Configuration {filepath} must be a JSON object")

        unknown = sorted(set(loaded) - set(self.default_config))
        if unknown:
            self.logger.warning(f"Ignoring unknown configuration keys: {', '.join(unknown)}")
        merged = self.default_config.copy()
        merged.update({k: v for k, v in loaded.items() if k in self.default_config})
        self.config = merged
        self.logger.info(f"Configuration loaded from {filepath}")
        return merged.copy()

    def get_default_config(self) -> Dict[str, Any]:
        return self.default_config.copy()

    def list_configs(self) -> list:
        if not self.config_dir.exists():
            return []
        return sorted(f.stem for f in self.config_dir.glob("*.json"))

    def get_enumeration_cap(self, override: Optional[int] = None) -> int:
        """
        Effective enumeration cap.

        Args:
            override: Value of the --cap flag, if given

        Raises:
            FormatError: RANKFORGE_CAP is set but not a positive integer
        """
        if override is not None:
            return int(override)
        env_value = os.environ.get(CAP_ENV_VAR)
        if env_value:
            try:
                cap = int(env_value)
            except ValueError as e:
                raise FormatError(f"{CAP_ENV_VAR}={env_value!r} is not an integer") from e
            if cap < 1:
                raise FormatError(f"{CAP_ENV_VAR} must be positive, got {cap}")
            return cap
        return int(self.config["enumeration_cap"])

    def get_chunk_size(self) -> int:
        return int(self.config["chunk_size"])
