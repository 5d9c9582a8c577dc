# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from locale import gettext as _
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from trajstat import MODELS_DIR
from trajstat.model import LindbladModel, load_model
from trajstat.utils import ConfigManager


def resolve_model_path(reference: str) -> Path:
    """Path of a model file, or of a bundled model given by name.

    Raises:
        FileNotFoundError: If neither exists.
    """

    path = Path(reference)

    if path.is_file():
        return path

    bundled = MODELS_DIR / f"{path.stem}.json"

    if bundled.is_file():
        return bundled

    raise FileNotFoundError(_("No such model file: %s") % reference)


@dataclass
class RunConfig:
    """Everything a command needs to reproduce its output.

    Attributes:
        command: Name of the command.
        model: Path or bundled name of the model, if any.
        options: Parsed command specific options.
        c: Spin counting field.
        workers: Requested size of the worker pool.
        tolerances: Tolerance overrides given on the command line.
        out: Output path, ``None`` for standard output.
    """

    command: str
    model: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)
    c: Tuple[float, ...] = ()
    workers: Optional[int] = None
    tolerances: Dict[str, float] = field(default_factory=dict)
    out: Optional[str] = None

    def option(self, key: str, fallback: Any = None) -> Any:
        value = self.options.get(key)
        return fallback if value is None else value

    def load_model(self) -> LindbladModel:
        """Load the model named by this configuration.

        Raises:
            OSError: If the file cannot be found or read.
            ModelError: If it is malformed or breaks an invariant.
        """

        if self.model is None:
            raise FileNotFoundError(_("Command needs a model file"))

        return load_model(resolve_model_path(self.model))

    def effective_workers(self) -> int:
        return ConfigManager().get_workers(self.workers)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "model": self.model,
            "options": dict(self.options),
            "c": list(self.c),
            "workers": self.effective_workers(),
            "tolerances": ConfigManager().get_tolerances(),
        }
