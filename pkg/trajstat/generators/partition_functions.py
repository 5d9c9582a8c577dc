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

import math
from locale import gettext as _

import numpy as np
import scipy.linalg

from trajstat.model import LindbladModel
from trajstat.superop import SuperOperator, matrix_exp_apply, stack, unstack
from .deformed_generators import build_T, build_W
from .tilt_point import TiltPoint

# Longest time step taken by one matrix exponential in log space
_LOG_STEP = 8.0


def _expectation(model: LindbladModel, operator: np.ndarray) -> complex:
    psi = model.initial_state
    return np.vdot(psi, operator @ psi)


def _scaled_powers(G: SuperOperator, K: int, start: np.ndarray):
    """Apply ``G`` K times, rescaling to keep entries near one."""

    vector = stack(start).astype(complex)
    log_scale = 0.0

    for _step in range(K):
        vector = G.matrix @ vector
        peak = np.max(np.abs(vector))

        if peak == 0.0:
            return vector, -math.inf

        vector /= peak
        log_scale += math.log(peak)

    return vector, log_scale


def transfer_power(G: SuperOperator, K: int, A: np.ndarray) -> np.ndarray:
    """``G^K(A)`` by repeated application."""

    vector = stack(A).astype(complex)

    for _step in range(K):
        vector = G.matrix @ vector

    return unstack(vector, G.dim)


def log_partition_K(model: LindbladModel, tilt: TiltPoint, K: int) -> float:
    """``log Z_K(x,c)`` accumulated in log space.

    Raises:
        DomainError: If ``x`` is not above the stability bound.
    """

    if K < 0:
        raise ValueError(_("Jump count must be nonnegative"))

    if K == 0:
        return 0.0

    transfer = build_T(model, tilt)
    vector, log_scale = _scaled_powers(transfer, K, np.eye(model.dim))
    value = _expectation(model, unstack(vector, model.dim)).real

    if value <= 0.0 or log_scale == -math.inf:
        return -math.inf

    return math.log(value) + log_scale


def partition_K(model: LindbladModel, tilt: TiltPoint, K: int) -> float:
    """``Z_K(x,c) = tr[ρ·𝕋_{x,c}^K(I)]``; exactly one for ``K = 0``."""

    if K == 0:
        return 1.0

    return math.exp(log_partition_K(model, tilt, K))


def partition_tau(model: LindbladModel, tilt: TiltPoint, tau: float) -> float:
    """``Z_τ(s,c) = tr[ρ·e^{τ𝕎_{s,c}}(I)]``; exactly one for ``τ = 0``."""

    if tau < 0:
        raise ValueError(_("Final time must be nonnegative"))

    if tau == 0:
        return 1.0

    generator = build_W(model, tilt)
    operator = matrix_exp_apply(generator, tau, np.eye(model.dim))

    return float(_expectation(model, operator).real)


def log_partition_tau(model: LindbladModel, tilt: TiltPoint, tau: float) -> float:
    """``log Z_τ(s,c)``, propagated in bounded steps for long times."""

    if tau < 0:
        raise ValueError(_("Final time must be nonnegative"))

    if tau == 0:
        return 0.0

    steps = max(1, math.ceil(tau / _LOG_STEP))
    generator = build_W(model, tilt)
    step = SuperOperator(
        scipy.linalg.expm((tau / steps) * generator.matrix),
        generator.picture,
        generator.dim,
    )

    vector, log_scale = _scaled_powers(step, steps, np.eye(model.dim))
    value = _expectation(model, unstack(vector, model.dim)).real

    if value <= 0.0 or log_scale == -math.inf:
        return -math.inf

    return math.log(value) + log_scale
