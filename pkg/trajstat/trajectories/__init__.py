# -*- coding: utf-8 -*-

from .trajectory import Estimate, SampleBatch, Scheme, Trajectory
from .waiting_time import WaitingTime, WaitingTimeSampler
from .waiting_time import sample_waiting_time, waiting_time_sampler
from .sampling import sample_fixed_count, sample_fixed_time, trajectory_stream
from .densities import EquivalenceReport, biased_weight_estimate
from .densities import classical_equivalence_check, importance_estimate
from .densities import trajectory_amplitude, trajectory_log_density

__all__ = [
    "EquivalenceReport",
    "Estimate",
    "SampleBatch",
    "Scheme",
    "Trajectory",
    "WaitingTime",
    "WaitingTimeSampler",
    "biased_weight_estimate",
    "classical_equivalence_check",
    "importance_estimate",
    "sample_fixed_count",
    "sample_fixed_time",
    "sample_waiting_time",
    "trajectory_amplitude",
    "trajectory_log_density",
    "trajectory_stream",
    "waiting_time_sampler",
]
