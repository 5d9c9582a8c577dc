# -*- coding: utf-8 -*-

from .count_resolved_state import CountResolvedState
from .concentration import ConcentrationReport, concentration_report
from .propagation import count_resolved_propagate, fft_counting_distribution
from .propagation import generating_function_check, initial_k_max
from .propagation import jump_time_density, laplace_check

__all__ = [
    "ConcentrationReport",
    "CountResolvedState",
    "concentration_report",
    "count_resolved_propagate",
    "fft_counting_distribution",
    "generating_function_check",
    "initial_k_max",
    "jump_time_density",
    "laplace_check",
]
