# -*- coding: utf-8 -*-

from locale import gettext as _

from trajstat.errors import DomainError
from trajstat.output_states import PhaseContext, gram_matrix
from trajstat.output_states import phase_covariance_check, reduced_convergence
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult

# Options of the phase-check command that configure its ensembles
_CONTEXT_KEYS = ("s", "tau", "K", "x", "tau0", "n_max", "nodes", "n_pairs", "seed")


def phase_context(config) -> PhaseContext:
    """Ensembles of a phase check, defaults filled in."""

    values = {
        key: config.options[key]
        for key in _CONTEXT_KEYS
        if config.options.get(key) is not None
    }

    return PhaseContext(**values)


class OutputProvider(ActionProvider):
    """Provides reduced output state and phase covariance checks."""

    def reduced(self, config) -> ActionResult:
        """Layer traces, block norms and distances to the limit state."""

        model = config.load_model()
        taus = config.option("tau", ())
        Ks = config.option("K", ())

        if not len(taus) and not len(Ks):
            raise ValueError(_("Either final times or jump counts are required"))

        report = reduced_convergence(
            model,
            config.option("s", 0.3),
            config.c,
            config.option("tau0", 1.0),
            taus,
            Ks,
            config.option("n_max"),
            config.option("nodes"),
        )

        try:
            gram = gram_matrix(model)
            report["gram"] = {
                "rank": gram.rank,
                "eigenvalues": gram.eigenvalues.tolist(),
            }
        except DomainError as e:
            report["gram"] = {"error": str(e)}

        return ActionResult().report("reduced", report)

    def phase_check(self, config) -> ActionResult:
        """Effect of a phase transformation on both ensembles."""

        model = config.load_model()
        kind = config.option("kind", "P1")
        phi = config.option("phi", 0.0)
        report = phase_covariance_check(model, kind, phi, phase_context(config))

        return ActionResult().report("phase_check", report.to_dict())

    def register(self, registry: ActionRegistry) -> None:
        """Register output state actions."""

        registry.register("reduced", self.reduced)
        registry.register("phase-check", self.phase_check)
