# -*- coding: utf-8 -*-

import numpy as np
import scipy.linalg

from .lindblad_model import LindbladModel
from .effective_hamiltonian import effective_hamiltonian


def no_jump_evolution(model: LindbladModel, t: float) -> np.ndarray:
    """The contraction ``e^{-itH_eff}`` over a time ``t``."""

    matrix = effective_hamiltonian(model).matrix
    return scipy.linalg.expm(-1j * t * matrix)


def survival(model: LindbladModel, psi: np.ndarray, t: float) -> float:
    """Probability ``‖e^{-itH_eff}ψ‖²`` of no jump up to time ``t``."""

    state = no_jump_evolution(model, t) @ psi
    return float(np.vdot(state, state).real)


def waiting_time_density(model: LindbladModel, psi: np.ndarray, t: float) -> float:
    """Density ``Σ_i ‖L_i e^{-itH_eff}ψ‖²`` of the first jump at ``t``."""

    state = no_jump_evolution(model, t) @ psi
    return float(np.vdot(state, model.jump_sum @ state).real)
