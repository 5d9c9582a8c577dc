# -*- coding: utf-8 -*-

from functools import partial
from locale import gettext as _

import numpy as np

from trajstat.counting import concentration_report, count_resolved_propagate
from trajstat.counting import generating_function_check, jump_time_density
from trajstat.counting import laplace_check
from trajstat.tasks import TaskExecutor
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult


def _distribution_rows(model, K_max, c, tau: float) -> list:
    state = count_resolved_propagate(model, tau, K_max, c)
    return [{"tau": float(tau), **row} for row in state.to_rows()]


def _generating_row(model, c, point) -> dict:
    s, tau = point
    error = generating_function_check(model, s, c, tau)
    return {"s": float(s), "tau": float(tau), "error": error}


class CountingProvider(ActionProvider):
    """Provides counting statistics and concentration trends."""

    def counting(self, config) -> ActionResult:
        """Counting distributions with their consistency checks."""

        model = config.load_model()
        taus = config.option("tau")

        if taus is None or len(taus) == 0:
            raise ValueError(_("At least one final time is required"))

        s_grid = config.option("s_grid", np.linspace(-0.5, 0.5, 5))
        points = [(s, tau) for tau in taus for s in s_grid]

        with TaskExecutor(config.effective_workers()) as executor:
            blocks = executor.map(
                partial(_distribution_rows, model, config.option("K_max"), config.c),
                taus,
            )
            checks = executor.map(partial(_generating_row, model, config.c), points)

        rows = [row for block in blocks for row in block]
        result = ActionResult().table("counting", rows)
        result.table("generating_checks", checks)

        K = config.option("jump_K")

        if K is not None:
            T_grid = np.asarray(config.option("T_grid", np.linspace(0.0, 10.0, 101)))
            density = jump_time_density(model, K, T_grid, config.c)
            result.table(
                "jump_density",
                [
                    {"K": int(K), "T": float(T), "p_K": float(value)}
                    for T, value in zip(T_grid, density)
                ],
            )

            x = config.option("laplace_x")

            if x is not None:
                result.report("laplace", laplace_check(model, K, x, config.c))

        return result

    def concentration(self, config) -> ActionResult:
        """Concentration exponents of the dual ensembles."""

        model = config.load_model()
        report = concentration_report(
            model,
            config.option("s", 0.3),
            config.c,
            config.option("K", (4, 8, 16, 32)),
        )

        return ActionResult().report("concentration", report.to_dict())

    def register(self, registry: ActionRegistry) -> None:
        """Register counting actions."""

        registry.register("counting", self.counting)
        registry.register("concentration", self.concentration)
