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
from functools import partial
from locale import gettext as _
from typing import Optional

import numpy as np

from trajstat.errors import DarkState
from trajstat.model import LindbladModel, model_hash
from trajstat.tasks import TaskExecutor
from trajstat.utils import ConfigManager
from .trajectory import SampleBatch, Scheme, Trajectory
from .waiting_time import waiting_time_sampler

_logger = logging.getLogger(__name__)

# Redraws allowed per trajectory when dark realizations are rejected
_MAX_REDRAWS = 1000


def trajectory_stream(seed: int, index: int) -> np.random.Generator:
    """Independent random stream of one trajectory of a batch."""

    sequence = np.random.SeedSequence(seed, spawn_key=(index,))
    return np.random.default_rng(sequence)


def _spin(model: LindbladModel, channels) -> tuple:
    if not channels:
        return (0.0,) * model.spin_length

    return tuple(np.sum(model.spins[list(channels)], axis=0).tolist())


def _fixed_count(model: LindbladModel, K: int, rng: np.random.Generator):
    sampler = waiting_time_sampler(model)
    psi = model.initial_state
    clock = 0.0
    times, channels = [], []

    for _step in range(K):
        draw = sampler.sample(psi, rng)
        clock += draw.time
        psi = draw.state
        times.append(clock)
        channels.append(draw.channel)

    return Trajectory(
        times, channels, Scheme.FIXED_COUNT, spin=_spin(model, channels)
    )


def _fixed_count_item(
    model: LindbladModel, K: int, seed: int, reject_dark: bool, index: int
):
    rng = trajectory_stream(seed, index)

    for attempt in range(_MAX_REDRAWS):
        try:
            return _fixed_count(model, K, rng), attempt
        except DarkState:
            if not reject_dark:
                raise

    raise DarkState(_("Every redraw of trajectory %d went dark") % index)


def _fixed_time_item(model: LindbladModel, tau: float, seed: int, index: int):
    rng = trajectory_stream(seed, index)
    sampler = waiting_time_sampler(model)
    psi = model.initial_state
    clock = 0.0
    times, channels = [], []

    while True:
        try:
            draw = sampler.sample(psi, rng)
        except DarkState:
            break

        if clock + draw.time > tau:
            break

        clock += draw.time
        psi = draw.state
        times.append(clock)
        channels.append(draw.channel)

    return Trajectory(
        times, channels, Scheme.FIXED_TIME, tau, _spin(model, channels)
    )


def _run(function, n_samples: int, workers: Optional[int]) -> list:
    workers = ConfigManager().get_workers(workers)

    with TaskExecutor(workers) as executor:
        return executor.map(function, range(n_samples))


def sample_fixed_count(
    model: LindbladModel,
    K: int,
    n_samples: int,
    seed: int,
    workers: Optional[int] = None,
    reject_dark: bool = False,
) -> SampleBatch:
    """Sample records that stop exactly at their K-th jump.

    Every trajectory draws from its own stream derived from
    ``(seed, index)``, so batches do not depend on the worker count.

    Args:
        model: The open quantum system.
        K: Number of jumps per record.
        n_samples: Number of records.
        seed: Root seed.
        workers: Size of the worker pool.
        reject_dark: Redraw records that reach a dark state instead of
            failing.

    Raises:
        DarkState: If a record cannot reach ``K`` jumps.
    """

    if K < 0 or n_samples < 0:
        raise ValueError(_("Jump count and sample size must be nonnegative"))

    function = partial(_fixed_count_item, model, K, seed, reject_dark)
    results = _run(function, n_samples, workers)
    rejected = sum(attempts for _trajectory, attempts in results)

    if rejected:
        _logger.info("Rejected dark realizations", extra={"rejected": rejected})

    return SampleBatch(
        trajectories=tuple(trajectory for trajectory, _attempts in results),
        scheme=Scheme.FIXED_COUNT,
        parameter=K,
        seed=seed,
        model_hash=model_hash(model),
        rejected=rejected,
    )


def sample_fixed_time(
    model: LindbladModel,
    tau: float,
    n_samples: int,
    seed: int,
    workers: Optional[int] = None,
) -> SampleBatch:
    """Sample records observed on the window ``[0, τ]``."""

    if tau < 0 or n_samples < 0:
        raise ValueError(_("Final time and sample size must be nonnegative"))

    function = partial(_fixed_time_item, model, tau, seed)
    trajectories = _run(function, n_samples, workers)

    return SampleBatch(
        trajectories=tuple(trajectories),
        scheme=Scheme.FIXED_TIME,
        parameter=tau,
        seed=seed,
        model_hash=model_hash(model),
    )
