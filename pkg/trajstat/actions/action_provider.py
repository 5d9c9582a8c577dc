# -*- coding: utf-8 -*-

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .action_registry import ActionRegistry


class ActionProvider(ABC):
    """A group of commands sharing one area of the numerical core.

    Each command is a callable taking a :class:`RunConfig` and returning
    an :class:`ActionResult`; providers bind them to command names.
    """

    @abstractmethod
    def register(self, registry: "ActionRegistry") -> None:
        """Bind every command of this provider to its name."""
