# -*- coding: utf-8 -*-

from enum import Enum

import numpy as np

from .lindblad_model import LindbladModel


class PhaseTransform(str, Enum):
    """Parameter transformations that leave the physical process intact."""

    P1 = "P1"  # L_i -> e^{iφ} L_i
    P2 = "P2"  # H -> H + φ


def apply_phase_transform(
    model: LindbladModel, kind: PhaseTransform | str, phi: float
) -> LindbladModel:
    """Rotate the jump operators or shift the Hamiltonian by a phase."""

    kind = PhaseTransform(kind)

    if kind is PhaseTransform.P1:
        phase = np.exp(1j * phi)
        jumps = tuple(phase * jump for jump in model.jumps)
        return model.replace(jumps=jumps)

    shift = phi * np.eye(model.dim)
    return model.replace(hamiltonian=model.hamiltonian + shift)
