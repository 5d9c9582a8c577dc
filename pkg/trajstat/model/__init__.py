# -*- coding: utf-8 -*-

from .lindblad_model import LindbladModel, check_model
from .effective_hamiltonian import EffectiveHamiltonian, effective_hamiltonian
from .model_loader import load_model, save_model, model_from_dict
from .model_loader import model_to_dict, model_hash
from .model_factory import two_level_decay, three_level_renewal
from .model_factory import driven_qubit, random_model
from .transforms import PhaseTransform, apply_phase_transform
from .waiting_time import no_jump_evolution, survival, waiting_time_density

__all__ = [
    "LindbladModel",
    "EffectiveHamiltonian",
    "PhaseTransform",
    "apply_phase_transform",
    "check_model",
    "driven_qubit",
    "effective_hamiltonian",
    "load_model",
    "model_from_dict",
    "model_hash",
    "model_to_dict",
    "no_jump_evolution",
    "random_model",
    "save_model",
    "survival",
    "three_level_renewal",
    "two_level_decay",
    "waiting_time_density",
]
