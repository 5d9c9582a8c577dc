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
from locale import gettext as _

from trajstat.errors import NumericalError
from trajstat.generators import TiltPoint, partition_K, partition_tau
from trajstat.thermo import potential
from trajstat.trajectories import Scheme, biased_weight_estimate
from trajstat.trajectories import importance_estimate
from trajstat.trajectories import sample_fixed_count, sample_fixed_time
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult

_logger = logging.getLogger(__name__)


def _typical_rate(model, tilt: TiltPoint):
    try:
        return potential(model, tilt).intensive.rate
    except NumericalError as e:
        _logger.warning("No typical rate", extra={"reason": str(e)})
        return None


class SamplingProvider(ActionProvider):
    """Provides quantum jump trajectory sampling."""

    def _sample(self, model, config):
        scheme = Scheme(config.option("scheme", Scheme.FIXED_TIME.value))
        n_samples = int(config.option("n", 1000))
        seed = int(config.option("seed", 0))

        if scheme is Scheme.FIXED_TIME:
            tau = config.option("tau")

            if tau is None:
                raise ValueError(_("Fixed time sampling needs a final time"))

            return sample_fixed_time(
                model, float(tau), n_samples, seed, config.workers
            )

        K = config.option("K")

        if K is None:
            raise ValueError(_("Fixed count sampling needs a jump count"))

        return sample_fixed_count(
            model,
            int(K),
            n_samples,
            seed,
            config.workers,
            bool(config.option("reject_dark", False)),
        )

    def _summary(self, model, batch, config) -> dict:
        """Sample means next to their deterministic counterparts."""

        summary = dict(batch.header())
        field = config.option("field")

        if batch.scheme is Scheme.FIXED_TIME:
            tau = batch.parameter
            rate = importance_estimate(batch.counts() / tau) if tau > 0 else None
            exact = _typical_rate(model, TiltPoint.s(0.0))

            if field is not None:
                tilt = TiltPoint.s(field, config.c)
                reference = partition_tau(model, tilt, tau)
        else:
            K = batch.parameter
            rate = importance_estimate(batch.final_times() / K) if K > 0 else None
            exact = _typical_rate(model, TiltPoint.x(0.0))

            if field is not None:
                tilt = TiltPoint.x(field, config.c)
                reference = partition_K(model, tilt, K)

        if rate is not None and exact is not None:
            summary["rate"] = rate.to_dict()
            summary["rate_exact"] = exact
            summary["rate_within_3se"] = rate.within(exact)

        if field is not None:
            estimate = biased_weight_estimate(batch, field, config.c)
            summary["partition"] = estimate.to_dict()
            summary["partition_exact"] = reference
            summary["partition_within_3se"] = estimate.within(reference)

        return summary

    def sample(self, config) -> ActionResult:
        """Trajectory stream with a summary of its statistics."""

        model = config.load_model()
        batch = self._sample(model, config)

        _logger.info("Sampled trajectories", extra=batch.header())

        rows = [trajectory.to_dict() for trajectory in batch.trajectories]
        result = ActionResult().stream("trajectories", rows)

        return result.report("summary", self._summary(model, batch, config))

    def register(self, registry: ActionRegistry) -> None:
        """Register sampling actions."""

        registry.register("sample", self.sample)
