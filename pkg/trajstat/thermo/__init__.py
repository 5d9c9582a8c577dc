# -*- coding: utf-8 -*-

from .potential_report import IntensiveQuantities, PotentialReport
from .potentials import dual_map, finite_difference_intensive
from .potentials import intensive_quantities, potential, schrodinger_generator
from .rate_function import RateFunction, check_convex, legendre_rate
from .relations import duality_row, eigenvector_angle, trace_distance
from .relations import schrodinger_eigvec_relation_residual

__all__ = [
    "IntensiveQuantities",
    "PotentialReport",
    "RateFunction",
    "check_convex",
    "dual_map",
    "duality_row",
    "eigenvector_angle",
    "finite_difference_intensive",
    "intensive_quantities",
    "legendre_rate",
    "potential",
    "schrodinger_eigvec_relation_residual",
    "schrodinger_generator",
    "trace_distance",
]
