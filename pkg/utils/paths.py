"""
Path management utility for rankforge.
Resolves the application root and the persistent data directories.
"""

import os
from pathlib import Path


def get_app_root() -> Path:
    """
    Get the absolute path to the application root.
    RANKFORGE_HOME overrides the checkout directory (useful for tests and
    read-only installs).
    """
    override = os.environ.get("RANKFORGE_HOME")
    if override:
        return Path(override).expanduser().resolve()
    return Path(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def get_data_path(relative_path: str) -> Path:
    """Resolve a path relative to the application root unless already absolute."""
    path = Path(relative_path)
    if path.is_absolute():
        return path
    return get_app_root() / path


# Standard App Paths
APP_ROOT = get_app_root()
LOGS_DIR = APP_ROOT / "logs"
CONFIGS_DIR = APP_ROOT / "configs"

