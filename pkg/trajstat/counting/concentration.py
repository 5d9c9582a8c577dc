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

import logging
import math
from dataclasses import dataclass
from locale import gettext as _
from typing import Sequence, Tuple

import numpy as np

from trajstat.generators import TiltPoint, log_partition_K, log_partition_tau
from trajstat.model import LindbladModel
from trajstat.thermo import dual_map, potential
from .propagation import count_resolved_propagate, jump_time_density

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConcentrationReport:
    """How sharply two dual canonical ensembles overlap as K grows.

    Attributes:
        s: Counting field of the s-ensemble.
        x: Its dual ``θ(s,c)``.
        c: Spin counting field shared by both ensembles.
        t: Time per jump ``t(x,c)``.
        K_list: Jump counts examined.
        tau_list: Matching final times ``τ_K = K·t``.
        log_ratio: Joint overlap exponent per ``K``.
        x_side: Canonical against microcanonical exponent of the
            x-ensemble per ``K``.
        s_side: Same for the s-ensemble at ``τ_K``.
        slope_estimate: Slope of ``log_ratio`` against ``K``.
    """

    s: float
    x: float
    c: Tuple[float, ...]
    t: float
    K_list: Tuple[int, ...]
    tau_list: Tuple[float, ...]
    log_ratio: Tuple[float, ...]
    x_side: Tuple[float, ...]
    s_side: Tuple[float, ...]
    slope_estimate: float

    def per_jump(self) -> np.ndarray:
        """``|log_ratio|/K``, which shrinks towards zero."""

        return np.abs(np.asarray(self.log_ratio)) / np.asarray(self.K_list)

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "x": self.x,
            "c": list(self.c),
            "t": self.t,
            "K_list": list(self.K_list),
            "tau_list": list(self.tau_list),
            "log_ratio": list(self.log_ratio),
            "x_side": list(self.x_side),
            "s_side": list(self.s_side),
            "per_jump": self.per_jump().tolist(),
            "slope_estimate": self.slope_estimate,
        }


def _log(value: float) -> float:
    return math.log(value) if value > 0.0 else -math.inf


def concentration_report(
    model: LindbladModel,
    s: float,
    c: Sequence[float] = (),
    K_range: Sequence[int] = (4, 8, 16, 32),
) -> ConcentrationReport:
    """Exponents comparing the dual canonical ensembles at growing K.

    At each ``K`` the s-ensemble is observed at ``τ_K = K·t(x,c)`` with
    ``x = θ(s,c)``. The joint exponent is
    ``−sK − xτ_K + 2·log p^c_K(τ_K) − log Z_K(x,c) − log Z_{τ_K}(s,c)``
    where ``p^c_K`` is the tilted density of the K-th jump time. Each
    ensemble's own canonical against microcanonical exponent is
    reported with it.

    Raises:
        DomainError: If ``θ(s,c)`` is not above ``x_min``.
        TailMassExceeded: If the counting truncation fails.
    """

    K_list = tuple(sorted(int(K) for K in K_range))

    if not K_list or K_list[0] < 1:
        raise ValueError(_("Jump counts must be positive"))

    s_tilt = TiltPoint.s(s, c)
    x_tilt = dual_map(model, s_tilt)
    x = x_tilt.field
    t = potential(model, x_tilt).intensive.t

    tau_list, log_ratio, x_side, s_side = [], [], [], []

    for K in K_list:
        tau = K * t
        log_density = _log(jump_time_density(model, K, [tau], c)[0])
        log_z_K = log_partition_K(model, x_tilt, K)
        log_z_tau = log_partition_tau(model, s_tilt, tau)

        state = count_resolved_propagate(model, tau, None, c)
        log_count = _log(state.weights()[K]) if K <= state.K_max else -math.inf

        tau_list.append(tau)
        log_ratio.append(-s * K - x * tau + 2 * log_density - log_z_K - log_z_tau)
        x_side.append(-x * tau + log_density - log_z_K)
        s_side.append(-s * K + log_count - log_z_tau)

    if len(K_list) > 1:
        slope = float(np.polyfit(K_list, log_ratio, 1)[0])
    else:
        slope = log_ratio[0] / K_list[0]

    _logger.info(
        "Concentration report",
        extra={"s": s, "x": x, "K_list": list(K_list), "slope": slope},
    )

    return ConcentrationReport(
        s=float(s),
        x=x,
        c=tuple(float(v) for v in c),
        t=t,
        K_list=K_list,
        tau_list=tuple(tau_list),
        log_ratio=tuple(log_ratio),
        x_side=tuple(x_side),
        s_side=tuple(s_side),
        slope_estimate=slope,
    )
