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
from locale import gettext as _
from typing import NamedTuple, Optional, Union

import numpy as np
import scipy.stats

from trajstat.errors import DomainError
from trajstat.generators import TiltPoint, build_T, log_partition_K
from trajstat.generators import model_resolvent, model_x_min
from trajstat.model import LindbladModel, effective_hamiltonian
from trajstat.superop import stack
from trajstat.trajectories import trajectory_stream, waiting_time_sampler
from trajstat.utils import ConfigManager, tolerance_cache
from .renewal_structure import NotRenewal, RenewalStructure

_logger = logging.getLogger(__name__)


class AnalyticPotential(NamedTuple):
    """Closed form dominant eigenpair of a renewal transfer map."""

    g: float
    F: np.ndarray
    rho: np.ndarray


def _rank_one(jump: np.ndarray, tolerance: float):
    """Left singular vector and ``φ`` of a rank one jump, else ``None``."""

    left, values, right = np.linalg.svd(jump)

    if values[0] == 0.0:
        return None

    if values.size > 1 and values[1] > tolerance * values[0]:
        return None

    return left[:, 0], values[0] * right[0].conj()


@tolerance_cache("renewal_rank")
def detect_renewal(model: LindbladModel) -> Union[RenewalStructure, NotRenewal]:
    """Find a common reset state shared by every jump operator.

    Each ``L_i`` must have a single singular value above the relative
    ``renewal_rank`` tolerance, and all left singular vectors must agree
    up to a phase.
    """

    tolerance = ConfigManager().get_tolerance("renewal_rank")
    reset, phis = None, []

    for index, jump in enumerate(model.jumps):
        factors = _rank_one(jump, tolerance)

        if factors is None:
            return NotRenewal(_("Jump operator %d is not rank one") % index)

        left, phi = factors

        if reset is None:
            # The largest component of the reset state is real positive
            pivot = left[np.argmax(np.abs(left))]
            phase = pivot / abs(pivot)
            reset, phi = left / phase, phi * np.conj(phase)
        else:
            overlap = np.vdot(reset, left)

            if abs(1.0 - abs(overlap)) > tolerance:
                return NotRenewal(
                    _("Jump operator %d resets to a different state") % index
                )

            phi = phi * np.conj(overlap / abs(overlap))

        phis.append(phi)

    if reset is None:
        return NotRenewal(_("The model has no jump operators"))

    D = sum(np.outer(phi, phi.conj()) for phi in phis)
    heff = effective_hamiltonian(model).matrix
    mismatch = float(np.max(np.abs(D - 1j * (heff - heff.conj().T))))

    _logger.debug(
        "Renewal structure found",
        extra={"model": model.name, "d_mismatch": mismatch},
    )

    return RenewalStructure(reset, tuple(phis), D, model)


def analytic_potential(structure: RenewalStructure, x: float) -> AnalyticPotential:
    """``e^{g(x)} = ⟨0|(x·Id + ℛ)^{-1}(D)|0⟩`` with its eigenvectors.

    The transfer map is ``𝕋_x(A) = B·⟨0|A|0⟩`` with
    ``B = (x·Id + ℛ)^{-1}(D)``, so it has one nonzero eigenvalue with
    right eigenvector ``F_x = B·e^{−g}`` and left eigenvector
    ``|0⟩⟨0|``.

    Raises:
        DomainError: If ``x`` is not above ``x_min``.
    """

    B = model_resolvent(structure.model, x).solve(structure.D)
    reset = structure.reset_state
    value = np.vdot(reset, B @ reset)

    if not value.real > 0.0:
        raise DomainError(_("Renewal eigenvalue is not positive at x = %s") % x)

    g = math.log(value.real)

    return AnalyticPotential(g, B * math.exp(-g), structure.reset_projector)


def _consecutive_waits(structure: RenewalStructure, n_samples: int, seed: int):
    sampler = waiting_time_sampler(structure.model)
    rng = trajectory_stream(seed, 0)
    state = structure.reset_state
    waits = np.empty(n_samples)

    for index in range(n_samples):
        draw = sampler.sample(state, rng)
        waits[index] = draw.time
        state = draw.state

    return waits


def renewal_product_checks(
    structure: RenewalStructure,
    K: int = 10,
    x: float = 0.5,
    n_samples: int = 100000,
    seed: int = 0,
) -> dict:
    """Product form facts of a renewal process at field ``x``.

    Reports the collapse ``𝕋_x² = e^{g}·𝕋_x``, the identity
    ``𝕋_0(A) = I·⟨0|A|0⟩``, the relative error of
    ``Z_K(x) = e^{Kg(x)}`` from the reset state and the lag one
    correlation of consecutive waiting times with its three standard
    error bound.

    Raises:
        DomainError: If ``K < 2`` or ``x_min`` is not negative.
        DarkState: If a sampled record stops jumping.
    """

    model = structure.model

    if K < 2:
        raise DomainError(_("Product checks need at least two jumps"))

    if not model_x_min(model) < 0.0:
        raise DomainError(_("Product checks need a negative x_min"))

    g = analytic_potential(structure, x).g
    transfer = build_T(model, TiltPoint.x(x)).matrix
    collapse = transfer @ transfer - math.exp(g) * transfer
    collapse_error = np.linalg.norm(collapse) / np.linalg.norm(transfer)

    trivial = build_T(model, TiltPoint.x(0.0)).matrix
    expected = np.outer(stack(np.eye(model.dim)), stack(structure.reset_projector.T))
    trivial_error = float(np.max(np.abs(trivial - expected)))

    reset_model = model.replace(initial_state=structure.reset_state)
    log_z = log_partition_K(reset_model, TiltPoint.x(x), K)
    partition_error = abs(math.expm1(log_z - K * g))

    report = {
        "K": int(K),
        "x": float(x),
        "g": g,
        "collapse_error": float(collapse_error),
        "trivial_transfer_error": trivial_error,
        "partition_error": float(partition_error),
    }

    if n_samples > 2:
        waits = _consecutive_waits(structure, n_samples, seed)
        correlation = scipy.stats.pearsonr(waits[:-1], waits[1:])[0]
        report["lag_correlation"] = float(correlation)
        report["correlation_bound"] = 3.0 / math.sqrt(n_samples)
        report["independent"] = bool(abs(correlation) < report["correlation_bound"])

    return report


def require_renewal(model: LindbladModel, margin: Optional[float] = None):
    """Renewal structure of a model with a strictly negative ``x_min``.

    Raises:
        DomainError: Naming the assumption the model breaks.
    """

    margin = 1e-10 if margin is None else margin
    structure = detect_renewal(model)

    if isinstance(structure, NotRenewal):
        raise DomainError(structure.reason)

    x_min = model_x_min(model)

    if x_min >= -margin:
        raise DomainError(
            _("The effective Hamiltonian has a non decaying mode (x_min = %.3g)")
            % x_min
        )

    return structure
