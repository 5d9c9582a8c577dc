# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from trajstat.model import LindbladModel


@dataclass(frozen=True, eq=False)
class RenewalStructure:
    """Jump operators of the form ``L_i = |0⟩⟨φ_i|``.

    Every detection resets the system to the same state, so waiting
    times between detections are independent.

    Attributes:
        reset_state: The unit vector ``|0⟩``.
        phi_vectors: One vector ``φ_i`` per jump channel.
        D: The operator ``Σ_i |φ_i⟩⟨φ_i|``.
        model: The model the structure was found in.
    """

    reset_state: np.ndarray
    phi_vectors: Tuple[np.ndarray, ...]
    D: np.ndarray
    model: LindbladModel

    @property
    def reset_projector(self) -> np.ndarray:
        return np.outer(self.reset_state, self.reset_state.conj())

    def to_dict(self) -> dict:
        return {
            "renewal": True,
            "reset_state": [str(value) for value in self.reset_state],
            "n_channels": len(self.phi_vectors),
        }


@dataclass(frozen=True)
class NotRenewal:
    """Marker for models whose jumps do not share a reset state."""

    reason: str

    def to_dict(self) -> dict:
        return {"renewal": False, "reason": self.reason}
