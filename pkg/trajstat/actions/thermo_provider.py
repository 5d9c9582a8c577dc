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

from functools import partial
from locale import gettext as _

from trajstat.errors import NonConvexInput
from trajstat.generators import EnsembleKind, TiltPoint
from trajstat.tasks import TaskExecutor
from trajstat.thermo import duality_row, finite_difference_intensive
from trajstat.thermo import legendre_rate, potential
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult


_KINDS = {"x": EnsembleKind.X_ENSEMBLE, "s": EnsembleKind.S_ENSEMBLE}


def _potential_row(model, kind: EnsembleKind, c, value: float) -> dict:
    tilt = TiltPoint(kind, float(value), tuple(c))
    report = potential(model, tilt)
    numeric = finite_difference_intensive(model, tilt)

    return {
        **report.to_dict(),
        "fd_rate": numeric.rate,
        "rate_mismatch": abs(numeric.rate - report.intensive.rate),
    }


class ThermoProvider(ActionProvider):
    """Provides potential sweeps and duality tables."""

    def potentials(self, config) -> ActionResult:
        """Potential, intensive quantities and rate function on a grid."""

        model = config.load_model()

        if config.option("x_grid") is not None:
            kind, grid = EnsembleKind.X_ENSEMBLE, config.option("x_grid")
        elif config.option("s_grid") is not None:
            kind, grid = EnsembleKind.S_ENSEMBLE, config.option("s_grid")
        elif config.option("grid") is not None:
            kind = _KINDS[config.option("kind", "s")]
            grid = config.option("grid")
        else:
            raise ValueError(_("A grid of counting fields is required"))

        function = partial(_potential_row, model, kind, config.c)
        rate_key = "t" if kind is EnsembleKind.X_ENSEMBLE else "k"

        with TaskExecutor(config.effective_workers()) as executor:
            rows = executor.map(function, grid)

        result = ActionResult().table("potentials", rows)

        try:
            rate = legendre_rate(
                [row["field"] for row in rows],
                [row["log_partition_rate"] for row in rows],
                kind,
                [-row[rate_key] for row in rows],
            )
            result.report("rate_function", rate.to_dict())
        except (NonConvexInput, ValueError) as e:
            result.report("rate_function", {"error": str(e)})

        return result

    def duality(self, config) -> ActionResult:
        """Duality checks at every counting field of a grid."""

        model = config.load_model()
        grid = config.option("s_grid")

        if grid is None:
            raise ValueError(_("An s grid is required"))

        function = partial(duality_row, model, c=config.c)

        with TaskExecutor(config.effective_workers()) as executor:
            rows = executor.map(function, grid)

        return ActionResult().table("duality", rows)

    def register(self, registry: ActionRegistry) -> None:
        """Register thermodynamic actions."""

        registry.register("potentials", self.potentials)
        registry.register("duality", self.duality)
