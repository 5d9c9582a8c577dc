# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple


class ArtifactKind(str, Enum):
    """Output format family of an artifact."""

    TABLE = "csv"
    REPORT = "json"
    STREAM = "jsonl"


@dataclass(frozen=True)
class Artifact:
    """One named output of an action.

    Tables and streams hold lists of flat rows; reports hold a
    nested mapping.
    """

    name: str
    kind: ArtifactKind
    payload: Any


@dataclass
class ActionResult:
    """Artifacts of an action, the first one being the primary output."""

    artifacts: Dict[str, Artifact] = field(default_factory=dict)

    def add(self, name: str, kind: ArtifactKind, payload: Any) -> "ActionResult":
        self.artifacts[name] = Artifact(name, ArtifactKind(kind), payload)
        return self

    def table(self, name: str, rows: list) -> "ActionResult":
        return self.add(name, ArtifactKind.TABLE, rows)

    def report(self, name: str, payload: dict) -> "ActionResult":
        return self.add(name, ArtifactKind.REPORT, payload)

    def stream(self, name: str, rows: list) -> "ActionResult":
        return self.add(name, ArtifactKind.STREAM, rows)

    @property
    def primary(self) -> Artifact:
        return next(iter(self.artifacts.values()))

    @property
    def secondary(self) -> Tuple[Artifact, ...]:
        return tuple(self.artifacts.values())[1:]
