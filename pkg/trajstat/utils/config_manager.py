# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import copy, json, logging, os
from pathlib import Path
from typing import Any
from trajstat import RESOURCES_DIR, CONFIG_DIR

_logger = logging.getLogger(__name__)

WORKERS_ENV = "TRAJSTAT_WORKERS"


class ConfigManager:
    """A singleton manager for run configuration and tolerances."""

    _instance = None

    def __new__(cls, *args, **kwargs) -> "ConfigManager":
        if cls._instance is None:
            cls._instance = super().__new__(cls)

        return cls._instance

    def __init__(self) -> None:
        if not hasattr(self, '_initialized'):
            self._defaults_path = RESOURCES_DIR / "config.json"
            self._config_path = CONFIG_DIR / "config.json"
            self._config: dict = {}
            self._overrides: dict = {}
            self._initialized = True
            self._load_config()

    def get_option(self, key: str, fallback: Any = None) -> Any:
        """Get a configuration value by key."""

        return self._config.get(key, fallback)

    def get_tolerance(self, key: str, fallback: float | None = None) -> float:
        """Get a numerical threshold, honouring run overrides."""

        if key in self._overrides:
            return self._overrides[key]

        tolerances = self._config.get("tolerances", {})

        if key not in tolerances and fallback is None:
            raise KeyError(key)

        return tolerances.get(key, fallback)

    def get_tolerances(self) -> dict:
        """Effective tolerance table, overrides applied."""

        tolerances = dict(self._config.get("tolerances", {}))
        tolerances.update(self._overrides)

        return tolerances

    def get_workers(self, requested: int | None = None) -> int:
        """Number of parallel workers for data-parallel sweeps.

        An explicit request wins over the environment, which wins
        over the configuration files.
        """

        if requested is not None:
            return max(1, int(requested))

        value = os.environ.get(WORKERS_ENV)

        if value:
            try:
                return max(1, int(value))
            except ValueError:
                _logger.warning("Ignoring invalid %s=%r", WORKERS_ENV, value)

        return max(1, int(self._config.get("workers", 1)))

    def override(self, key: str, value: float) -> None:
        """Override a tolerance for the rest of the run."""

        tolerances = self._config.get("tolerances", {})

        if key not in tolerances:
            raise KeyError(key)

        self._overrides[key] = type(tolerances[key])(value)

    def clear_overrides(self) -> None:
        """Drop every run override."""

        self._overrides.clear()

    def reload_settings(self) -> None:
        """Reload configuration from files."""

        self._config = {}
        self._overrides = {}
        self._load_config()

    def _load_config(self) -> None:
        """Load the defaults and overlay the user configuration."""

        self._load_from_json(self._defaults_path)

        if self._config_path.exists():
            self._load_from_json(self._config_path)

    def _load_from_json(self, path: Path) -> None:
        """Load and merge a JSON configuration file."""

        try:
            with path.open('r') as f:
                config = json.load(f)

                for key, value in config.items():
                    if key == "tolerances" and isinstance(value, dict):
                        merged = copy.deepcopy(self._config.get(key, {}))
                        merged.update(value)
                        self._config[key] = merged
                    elif value is not None:
                        self._config[key] = value
        except Exception as e:
            _logger.error("Error loading config: %s", e)
