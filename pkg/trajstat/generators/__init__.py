# -*- coding: utf-8 -*-

from .tilt_point import EnsembleKind, TiltPoint
from .deformed_generators import build_T, build_W, connection_residual
from .deformed_generators import deformed_generator, tilted_jump_map
from .deformed_generators import model_R, model_resolvent, model_x_min
from .partition_functions import partition_K, partition_tau
from .partition_functions import log_partition_K, log_partition_tau
from .partition_functions import transfer_power

__all__ = [
    "EnsembleKind",
    "TiltPoint",
    "build_T",
    "build_W",
    "connection_residual",
    "deformed_generator",
    "log_partition_K",
    "log_partition_tau",
    "model_R",
    "model_resolvent",
    "model_x_min",
    "partition_K",
    "partition_tau",
    "tilted_jump_map",
    "transfer_power",
]
