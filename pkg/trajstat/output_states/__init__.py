# -*- coding: utf-8 -*-

from .gram_matrix import GramMatrix, gram_matrix
from .quadrature import LayerGrid, layer_grid
from .overlaps import canonical_overlap, propagate_state_K
from .reduced_states import LimitState, ReducedEnsemble, ReducedState
from .reduced_states import layer_amplitudes, limit_state, reduced_block_finite
from .reduced_states import reduced_convergence, reduced_state_finite
from .reduced_states import reduced_trace_distance
from .phase_covariance import PhaseContext, PhaseCovarianceReport
from .phase_covariance import phase_covariance_check

__all__ = [
    "GramMatrix",
    "LayerGrid",
    "LimitState",
    "PhaseContext",
    "PhaseCovarianceReport",
    "ReducedEnsemble",
    "ReducedState",
    "canonical_overlap",
    "gram_matrix",
    "layer_amplitudes",
    "layer_grid",
    "limit_state",
    "phase_covariance_check",
    "propagate_state_K",
    "reduced_block_finite",
    "reduced_convergence",
    "reduced_state_finite",
    "reduced_trace_distance",
]
