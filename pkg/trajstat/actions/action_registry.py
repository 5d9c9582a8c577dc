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

from asyncio import iscoroutinefunction
from locale import gettext as _
from typing import Any, Callable, Dict, List, Set, TYPE_CHECKING

if TYPE_CHECKING:
    from trajstat.application.run_config import RunConfig
    from .action_provider import ActionProvider
    from .action_result import ActionResult


class ActionRegistry:
    """A singleton registry for the commands of the command line tool.

    Providers register one action per command name; the command line
    front end invokes them by name with the parsed run configuration.
    """

    _instance = None

    def __new__(cls, *args: Any, **kwargs: Any) -> "ActionRegistry":
        if cls._instance is None:
            cls._instance = super().__new__(cls)

        return cls._instance

    def __init__(self) -> None:
        if not hasattr(self, '_initialized'):
            self._actions: Dict[str, Callable] = {}
            self._providers: Set[type] = set()
            self._initialized = True

    def add_provider(self, provider: "ActionProvider") -> None:
        """Register an action provider and all its actions"""

        if type(provider) not in self._providers:
            self._providers.add(type(provider))
            provider.register(self)

    def register(self, name: str, callback: Callable) -> None:
        """Register an action with the registry.

        Args:
            name: A unique identifier for the action
            callback: A callable that implements the action
        """

        self._actions[name] = callback

    def names(self) -> List[str]:
        """Names of every registered action, sorted."""

        return sorted(self._actions)

    async def invoke(self, name: str, config: "RunConfig") -> "ActionResult":
        """Invoke a registered action by name.

        Args:
            name: The identifier of the action to invoke
            config: The run configuration to pass to the action

        Returns:
            The artifacts produced by the action

        Raises:
            KeyError: If no action is registered under ``name``
        """

        if name not in self._actions:
            raise KeyError(_("Unknown command: %s") % name)

        callback = self._actions[name]

        if iscoroutinefunction(callback):
            return await callback(config)

        return callback(config)
