# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from typing import Sequence

import numpy as np
import scipy.linalg

from trajstat.generators import TiltPoint, connection_residual
from trajstat.generators import model_R, model_x_min
from trajstat.model import LindbladModel
from trajstat.superop import Resolvent, stack
from .potentials import dual_map, potential


def trace_distance(first: np.ndarray, second: np.ndarray) -> float:
    """Half the trace norm of the difference of two states."""

    difference = first - second
    hermitian = 0.5 * (difference + difference.conj().T)

    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(hermitian))))


def eigenvector_angle(first: np.ndarray, second: np.ndarray) -> float:
    """Sine of the principal angle between two operators as vectors."""

    angles = scipy.linalg.subspace_angles(
        stack(first)[:, None],
        stack(second)[:, None],
    )

    return float(np.sin(angles[0]))


def schrodinger_eigvec_relation_residual(
    model: LindbladModel, s: float, c: Sequence[float] = ()
) -> float:
    """How far ``ρ_{s,c}`` is from ``(x·Id + ℛ_*)^{-1}(ρ_{x,c})``.

    Both states come from independent eigen decompositions at the dual
    points ``s`` and ``x = θ(s,c)``; the transformed state is
    renormalized to unit trace.

    Returns:
        Trace distance between the two states.

    Raises:
        DomainError: If ``θ(s,c)`` is not above ``x_min``.
    """

    s_tilt = TiltPoint.s(s, c)
    x_tilt = dual_map(model, s_tilt)

    rho_s = potential(model, s_tilt).left_eig_schr
    rho_x = potential(model, x_tilt).left_eig_schr

    adjoint = model_R(model).adjoint()
    resolvent = Resolvent(adjoint, x_tilt.field, model_x_min(model))
    transformed = resolvent.solve(rho_x)
    transformed = transformed / np.trace(transformed)

    return trace_distance(rho_s, transformed)


def duality_row(model: LindbladModel, s: float, c: Sequence[float] = ()) -> dict:
    """Every duality check at one counting field.

    Returns:
        A flat mapping with the fields, potentials, round trip error,
        intensive quantities and their products, eigenvector angle,
        ``α_{s,c}``, connection residual and spin relation mismatch.
    """

    s_report = potential(model, TiltPoint.s(s, c))
    x_tilt = dual_map(model, s_report.tilt)
    x_report = potential(model, x_tilt)

    k = s_report.intensive.k
    t = x_report.intensive.t
    m = np.asarray(x_report.intensive.m, dtype=float)
    m_tilde = np.asarray(s_report.intensive.m_tilde, dtype=float)
    alpha = np.trace(x_report.right_eig @ s_report.left_eig_heis).real

    return {
        "s": float(s),
        "theta": s_report.potential,
        "x": x_tilt.field,
        "g": x_report.potential,
        "round_trip_error": abs(x_report.potential - s),
        "k": k,
        "t": t,
        "t_times_k": t * k,
        "spin_mismatch": float(np.linalg.norm(m - m_tilde / k)) if k else np.inf,
        "eig_angle": eigenvector_angle(x_report.right_eig, s_report.right_eig),
        "alpha": float(alpha),
        "connection_residual": connection_residual(model, s, c, x_tilt.field),
    }
