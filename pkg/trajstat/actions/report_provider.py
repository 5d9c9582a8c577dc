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
from typing import Callable

from trajstat.counting import concentration_report
from trajstat.errors import NumericalError
from trajstat.model import PhaseTransform
from trajstat.output_states import PhaseContext, phase_covariance_check
from trajstat.output_states import reduced_convergence
from trajstat.thermo import duality_row, schrodinger_eigvec_relation_residual
from trajstat.trajectories import classical_equivalence_check
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult

_logger = logging.getLogger(__name__)


def _section(name: str, compute: Callable[[], dict]) -> dict:
    """Run one report section, recording numerical failures in place."""

    try:
        return compute()
    except NumericalError as e:
        _logger.warning(
            "Report section failed",
            extra={"section": name, "error": type(e).__name__, "reason": str(e)},
        )
        return {"error": type(e).__name__, "message": str(e)}


class ReportProvider(ActionProvider):
    """Provides the bundled ensemble equivalence report."""

    def equivalence_report(self, config) -> ActionResult:
        """Every ensemble equivalence check at one counting field."""

        model = config.load_model()
        s, c = config.option("s", 0.3), config.c
        tau0 = config.option("tau0", 1.0)
        phi = config.option("phi", 0.7)
        taus = config.option("tau", (3.0, 6.0, 11.0))
        Ks = config.option("K", (4, 8, 16))
        n_samples = int(config.option("n", 0))
        seed = int(config.option("seed", 0))
        context = PhaseContext(
            s=s,
            tau0=tau0,
            n_max=config.option("n_max"),
            nodes=config.option("nodes"),
            seed=seed,
        )

        def duality() -> dict:
            row = duality_row(model, s, c)
            row["schrodinger_residual"] = schrodinger_eigvec_relation_residual(
                model, s, c
            )
            return row

        def concentration() -> dict:
            K_range = config.option("K_range", (4, 8, 16, 32))
            return concentration_report(model, s, c, K_range).to_dict()

        def equivalence() -> dict:
            report = classical_equivalence_check(
                model, s, taus, n_samples, seed, config.workers
            )
            return report.to_dict()

        def reduced() -> dict:
            return reduced_convergence(
                model, s, c, tau0, taus, Ks, context.n_max, context.nodes
            )

        def phases() -> dict:
            return {
                kind.value: phase_covariance_check(model, kind, phi, context).to_dict()
                for kind in PhaseTransform
            }

        report = {
            "s": s,
            "c": list(c),
            "tau0": tau0,
            "duality": _section("duality", duality),
            "concentration": _section("concentration", concentration),
            "classical_equivalence": _section("classical_equivalence", equivalence),
            "reduced": _section("reduced", reduced),
            "phase_check": _section("phase_check", phases),
        }

        return ActionResult().report("equivalence_report", report)

    def register(self, registry: ActionRegistry) -> None:
        """Register report actions."""

        registry.register("equivalence-report", self.equivalence_report)
