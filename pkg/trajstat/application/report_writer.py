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

import csv
import json
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import IO, Any, Iterable, List, Optional

import numpy as np

from trajstat.actions import ActionResult, Artifact, ArtifactKind

_logger = logging.getLogger(__name__)


def to_builtin(value: Any) -> Any:
    """Convert numpy scalars, arrays and complex numbers for JSON."""

    if isinstance(value, dict):
        return {str(key): to_builtin(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [to_builtin(item) for item in value]

    if isinstance(value, np.ndarray):
        return to_builtin(value.tolist())

    if isinstance(value, np.generic):
        return to_builtin(value.item())

    if isinstance(value, complex):
        return value.real if value.imag == 0 else str(value)

    if isinstance(value, Enum):
        return value.value

    return value


def format_cell(value: Any) -> str:
    """Text of one CSV cell, floats with 17 significant digits."""

    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()

    if isinstance(value, (float, np.floating)):
        return "%.17g" % value

    if value is None:
        return ""

    return str(value)


def flatten_row(row: dict) -> dict:
    """Spread list valued columns over ``name_0, name_1, …``."""

    flat = {}

    for key, value in to_builtin(row).items():
        if isinstance(value, list):
            for index, item in enumerate(value):
                flat[f"{key}_{index}"] = item
        elif isinstance(value, dict):
            for inner, item in flatten_row(value).items():
                flat[f"{key}_{inner}"] = item
        else:
            flat[key] = value

    return flat


class ReportWriter:
    """Writes the artifacts of an action under a reproducibility header.

    Args:
        header: Run configuration, model hash and code version.
    """

    def __init__(self, header: dict) -> None:
        self._header = to_builtin(header)

    @property
    def header(self) -> dict:
        return self._header

    def write_csv(self, stream: IO[str], rows: List[dict] | dict) -> None:
        rows = [rows] if isinstance(rows, dict) else rows
        flat = [flatten_row(row) for row in rows]
        columns = list(dict.fromkeys(key for row in flat for key in row))

        stream.write(f"# {json.dumps(self._header)}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)

        for row in flat:
            writer.writerow([format_cell(row.get(key)) for key in columns])

    def write_json(self, stream: IO[str], payload: Any) -> None:
        document = {"header": self._header, "payload": to_builtin(payload)}
        json.dump(document, stream, indent=2)
        stream.write("\n")

    def write_jsonl(self, stream: IO[str], rows: Iterable[dict]) -> None:
        rows = [rows] if isinstance(rows, dict) else rows
        stream.write(json.dumps({"header": self._header}) + "\n")

        for row in rows:
            stream.write(json.dumps(to_builtin(row)) + "\n")

    def write_artifact(self, stream: IO[str], artifact: Artifact, kind=None) -> None:
        kind = ArtifactKind(kind or artifact.kind)

        if kind is ArtifactKind.TABLE:
            self.write_csv(stream, artifact.payload)
        elif kind is ArtifactKind.STREAM:
            self.write_jsonl(stream, artifact.payload)
        else:
            self.write_json(stream, artifact.payload)

    def _write_file(self, path: Path, artifact: Artifact, kind=None) -> None:
        with path.open('w', newline='') as f:
            self.write_artifact(f, artifact, kind)

        _logger.info("Wrote %s", path, extra={"artifact": artifact.name})

    def write(self, result: ActionResult, out: Optional[str] = None) -> List[Path]:
        """Write every artifact of a result.

        Without ``out`` the primary artifact goes to standard output. A
        path with a suffix receives the primary artifact, formatted by
        that suffix when it names a known format, and every other
        artifact is written next to it as ``<stem>_<name>.<ext>``. A
        path without suffix is a directory receiving ``<name>.<ext>``
        for every artifact.

        Raises:
            OSError: If a file cannot be written.
        """

        if out is None:
            self.write_artifact(sys.stdout, result.primary)
            return []

        path = Path(out)
        written = []

        if not path.suffix:
            path.mkdir(parents=True, exist_ok=True)

            for artifact in result.artifacts.values():
                target = path / f"{artifact.name}.{artifact.kind.value}"
                self._write_file(target, artifact)
                written.append(target)

            return written

        suffixes = {kind.value for kind in ArtifactKind}
        suffix = path.suffix.lstrip(".")
        kind = ArtifactKind(suffix) if suffix in suffixes else None

        path.parent.mkdir(parents=True, exist_ok=True)
        self._write_file(path, result.primary, kind)
        written.append(path)

        for artifact in result.secondary:
            target = path.with_name(
                f"{path.stem}_{artifact.name}.{artifact.kind.value}"
            )
            self._write_file(target, artifact)
            written.append(target)

        return written
