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
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from trajstat.counting import count_resolved_propagate, fft_counting_distribution
from trajstat.errors import InsufficientAcceptance
from trajstat.generators import TiltPoint, log_partition_tau
from trajstat.model import LindbladModel, effective_hamiltonian
from trajstat.thermo import potential
from trajstat.utils import ConfigManager
from .sampling import sample_fixed_time
from .trajectory import Estimate, SampleBatch, Scheme, Trajectory
from .waiting_time import waiting_time_sampler

_logger = logging.getLogger(__name__)


def trajectory_log_density(model: LindbladModel, trajectory: Trajectory) -> float:
    """Log of the probability density of a jump record.

    Propagates ``ψ`` through every waiting time and jump, renormalizing
    as it goes. A fixed time record also decays without jumps from its
    last jump until ``τ``.

    Returns:
        ``log‖J[X]ψ‖²`` or ``log‖V^τ[X]ψ‖²``; ``-inf`` for records of
        zero density.
    """

    heff = effective_hamiltonian(model).matrix
    phi = np.array(model.initial_state, dtype=complex)
    log_norm = 0.0

    def advance(state: np.ndarray, time: float) -> np.ndarray:
        return scipy.linalg.expm(-1j * time * heff) @ state

    for wait, channel in zip(trajectory.waiting_times, trajectory.channels):
        phi = model.jumps[channel] @ advance(phi, wait)
        norm = np.linalg.norm(phi)

        if norm == 0.0:
            return -math.inf

        phi /= norm
        log_norm += 2.0 * math.log(norm)

    if trajectory.scheme is Scheme.FIXED_TIME:
        remaining = trajectory.tau - trajectory.T

        if remaining > 0:
            norm = np.linalg.norm(advance(phi, remaining))

            if norm == 0.0:
                return -math.inf

            log_norm += 2.0 * math.log(norm)

    return log_norm


def trajectory_amplitude(
    model: LindbladModel,
    trajectory: Trajectory,
    s: complex = 0.0,
    x: complex = 0.0,
    c: Sequence[float] = (),
) -> np.ndarray:
    """Tilted conditional wavefunction ``e^{−sK/2−xT/2−c·M/2}·V[X]ψ``.

    Fixed time records keep evolving without jumps until ``τ``. Complex
    fields are accepted, which is how phase shifts of a field show up.
    """

    sampler = waiting_time_sampler(model)
    phi = np.array(model.initial_state, dtype=complex)

    for wait, channel in zip(trajectory.waiting_times, trajectory.channels):
        phi = model.jumps[channel] @ sampler.evolve(phi, wait)

    if trajectory.scheme is Scheme.FIXED_TIME:
        phi = sampler.evolve(phi, trajectory.tau - trajectory.T)

    exponent = -0.5 * s * trajectory.K - 0.5 * x * trajectory.T

    if len(c) and len(trajectory.spin):
        exponent -= 0.5 * np.dot(trajectory.spin, np.asarray(c, dtype=float))

    return np.exp(exponent) * phi


def importance_estimate(
    values: Sequence[float], log_weights: Optional[Sequence[float]] = None
) -> Estimate:
    """Mean of ``values`` with its standard error.

    With ``log_weights`` the mean is self-normalized and the effective
    sample size ``(Σw)²/Σw²`` is reported; a warning is logged when it
    drops below ``ess_fraction`` of the sample.
    """

    values = np.asarray(values, dtype=float)
    n = values.size

    if n == 0:
        raise ValueError(_("Cannot estimate from an empty sample"))

    if log_weights is None:
        spread = np.std(values, ddof=1) if n > 1 else 0.0
        mean = float(np.mean(values))
        return Estimate(mean, float(spread / math.sqrt(n)), float(n), n)

    log_weights = np.asarray(log_weights, dtype=float)
    weights = np.exp(log_weights - np.max(log_weights))
    total = np.sum(weights)

    mean = float(np.sum(weights * values) / total)
    ess = float(total ** 2 / np.sum(weights ** 2))
    error = float(np.sqrt(np.sum(weights ** 2 * (values - mean) ** 2)) / total)

    if ess < ConfigManager().get_tolerance("ess_fraction") * n:
        _logger.warning(
            "Low effective sample size",
            extra={"ess": ess, "n_samples": n},
        )

    return Estimate(mean, error, ess, n)


def biased_weight_estimate(
    batch: SampleBatch, field: float, c: Sequence[float] = ()
) -> Estimate:
    """Sample mean of the bias that turns a batch into a canonical one.

    Averages ``e^{−sK[X]−c·M[X]}`` over a fixed time batch or
    ``e^{−xT[X]−c·M[X]}`` over a fixed count batch, which estimates
    ``Z_τ(s,c)`` or ``Z_K(x,c)`` respectively.
    """

    if batch.scheme is Scheme.FIXED_TIME:
        exponent = -field * batch.counts()
    else:
        exponent = -field * batch.final_times()

    if len(c):
        exponent = exponent - batch.spins() @ np.asarray(c, dtype=float)

    return importance_estimate(np.exp(exponent))


@dataclass(frozen=True)
class EquivalenceReport:
    """Canonical against microcanonical exponents over growing windows.

    Attributes:
        s: Counting field of the canonical ensemble.
        k: Typical jump rate ``k(s,0)``.
        tau_list: Observation windows.
        K_list: Shell counts ``round(τ·k)``.
        deterministic: Exact exponents from the counting distribution.
        fourier: Same exponents from the Fourier inverted distribution.
        monte_carlo: Sampled exponents, empty without samples.
        standard_errors: Standard errors of the sampled exponents.
        acceptance: Fraction of samples on the shell per window.
    """

    s: float
    k: float
    tau_list: Tuple[float, ...]
    K_list: Tuple[int, ...]
    deterministic: Tuple[float, ...]
    fourier: Tuple[float, ...]
    monte_carlo: Tuple[float, ...] = ()
    standard_errors: Tuple[float, ...] = ()
    acceptance: Tuple[float, ...] = ()

    @property
    def is_shrinking(self) -> bool:
        """Whether ``|exponent|`` decreases along the windows."""

        return bool(np.all(np.diff(np.abs(self.deterministic)) < 0))

    def to_dict(self) -> dict:
        values = {
            key: (list(value) if isinstance(value, tuple) else value)
            for key, value in vars(self).items()
        }
        values["is_shrinking"] = self.is_shrinking
        return values


def _log(value: float) -> float:
    return math.log(value) if value > 0.0 else -math.inf


def _fourier_points(K_max: int) -> int:
    return 1 << max(5, math.ceil(math.log2(4 * (K_max + 1))))


def classical_equivalence_check(
    model: LindbladModel,
    s: float,
    tau_list: Sequence[float],
    n_samples: int = 0,
    seed: int = 0,
    workers: Optional[int] = None,
) -> EquivalenceReport:
    """Exponent of the canonical to microcanonical likelihood ratio.

    On the shell ``K[X] = K_τ = round(τ·k(s,0))`` the ratio is the same
    for every record, ``e^{−sK_τ}·P_τ(K_τ)/Z_τ(s)``, so its exponent per
    unit time is computed exactly and, when ``n_samples`` is positive,
    also estimated from unbiased fixed time samples by rejection.

    Raises:
        InsufficientAcceptance: If too few samples land on the shell.
    """

    k = potential(model, TiltPoint.s(s)).intensive.k
    minimum = ConfigManager().get_tolerance("acceptance_min")

    K_list, deterministic, fourier = [], [], []
    monte_carlo, errors, acceptances = [], [], []

    for index, tau in enumerate(tau_list):
        K = int(round(tau * k))
        log_z = log_partition_tau(model, TiltPoint.s(s), tau)

        state = count_resolved_propagate(model, tau)
        weights = state.weights()
        probability = weights[K] if K <= state.K_max else 0.0

        points = _fourier_points(state.K_max)
        alternative = fft_counting_distribution(model, tau, points)[K % points]

        K_list.append(K)
        deterministic.append((-s * K + _log(probability) - log_z) / tau)
        fourier.append((-s * K + _log(alternative) - log_z) / tau)

        if n_samples <= 0:
            continue

        batch = sample_fixed_time(model, tau, n_samples, seed + index, workers)
        counts = batch.counts()
        acceptance = float(np.mean(counts == K))

        if acceptance < minimum:
            raise InsufficientAcceptance(
                _("Only %.3g of the samples reach K = %d") % (acceptance, K),
                acceptance,
            )

        biased = importance_estimate(np.exp(-s * counts))
        variance = (1.0 - acceptance) / (n_samples * acceptance)
        variance += (biased.standard_error / biased.mean) ** 2

        exponent = -s * K + math.log(acceptance) - math.log(biased.mean)
        monte_carlo.append(exponent / tau)
        errors.append(math.sqrt(variance) / tau)
        acceptances.append(acceptance)

    return EquivalenceReport(
        s=float(s),
        k=float(k),
        tau_list=tuple(float(t) for t in tau_list),
        K_list=tuple(K_list),
        deterministic=tuple(deterministic),
        fourier=tuple(fourier),
        monte_carlo=tuple(monte_carlo),
        standard_errors=tuple(errors),
        acceptance=tuple(acceptances),
    )
