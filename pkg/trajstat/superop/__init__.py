# -*- coding: utf-8 -*-

from .super_operator import Picture, SuperOperator
from .super_operator import build_R, build_jump_map, sandwich, stack, unstack
from .resolvent import Resolvent, cached_resolvent, check_field, resolvent_solve
from .exponential import matrix_exp_apply, propagator
from .eigen_pair import EigenPair, RankingMode, dominant_eigenpair
from .eigen_pair import is_positive_semidefinite

__all__ = [
    "EigenPair",
    "Picture",
    "RankingMode",
    "Resolvent",
    "SuperOperator",
    "build_R",
    "build_jump_map",
    "cached_resolvent",
    "check_field",
    "dominant_eigenpair",
    "is_positive_semidefinite",
    "matrix_exp_apply",
    "propagator",
    "resolvent_solve",
    "sandwich",
    "stack",
    "unstack",
]
