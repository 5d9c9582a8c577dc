# -*- coding: utf-8 -*-

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np


class EnsembleKind(str, Enum):
    """The two ways of truncating a jump record."""

    X_ENSEMBLE = "x_ensemble"  # fixed number of jumps, tilted by e^{-xT}
    S_ENSEMBLE = "s_ensemble"  # fixed final time, tilted by e^{-sK}


@dataclass(frozen=True)
class TiltPoint:
    """Counting fields selecting one biased trajectory ensemble.

    Attributes:
        kind: Which ensemble the field ``field`` belongs to.
        field: The field ``x`` or ``s``.
        c: Spin counting field, one entry per spin component.
    """

    kind: EnsembleKind
    field: float
    c: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", EnsembleKind(self.kind))
        object.__setattr__(self, "field", float(self.field))
        object.__setattr__(self, "c", tuple(float(v) for v in self.c))

    @classmethod
    def x(cls, value: float, c: Sequence[float] = ()) -> "TiltPoint":
        return cls(EnsembleKind.X_ENSEMBLE, value, tuple(c))

    @classmethod
    def s(cls, value: float, c: Sequence[float] = ()) -> "TiltPoint":
        return cls(EnsembleKind.S_ENSEMBLE, value, tuple(c))

    @property
    def c_vector(self) -> np.ndarray:
        return np.asarray(self.c, dtype=float)

    def with_field(self, value: float) -> "TiltPoint":
        return TiltPoint(self.kind, value, self.c)

    def with_c(self, c: Sequence[float]) -> "TiltPoint":
        return TiltPoint(self.kind, self.field, tuple(c))

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "field": self.field, "c": list(self.c)}
