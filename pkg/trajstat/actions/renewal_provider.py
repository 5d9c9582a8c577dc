# -*- coding: utf-8 -*-

from trajstat.renewal import renewal_demo
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult


class RenewalProvider(ActionProvider):
    """Provides the renewal process walkthrough."""

    def renewal_demo(self, config) -> ActionResult:
        """Every renewal artifact for the three level atom."""

        demo = renewal_demo(
            omega1=config.option("omega1", 1.0),
            omega2=config.option("omega2", 0.2),
            kappa=config.option("kappa", 1.0),
            s=config.option("s", 0.3),
            n_samples=int(config.option("n", 0)),
            seed=int(config.option("seed", 0)),
        )

        result = ActionResult()

        for name, payload in demo.reports.items():
            result.report(name, payload)

        for name, rows in demo.tables.items():
            result.table(name, rows)

        return result

    def register(self, registry: ActionRegistry) -> None:
        """Register renewal actions."""

        registry.register("renewal-demo", self.renewal_demo)
