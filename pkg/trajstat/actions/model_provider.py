# -*- coding: utf-8 -*-

import logging

from trajstat.model import check_model, effective_hamiltonian, model_hash
from trajstat.renewal import detect_renewal
from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult

_logger = logging.getLogger(__name__)


class ModelProvider(ActionProvider):
    """Provides model file validation."""

    def validate(self, config) -> ActionResult:
        """Load a model and report its structure."""

        model = config.load_model()
        heff = effective_hamiltonian(model)

        report = {
            "valid": not check_model(model),
            "name": model.name,
            "dim": model.dim,
            "n_jumps": model.n_jumps,
            "spin_length": model.spin_length,
            "x_min": heff.x_min,
            "stable": heff.is_stable,
            "model_hash": model_hash(model),
            **detect_renewal(model).to_dict(),
        }

        _logger.info("Model validated", extra={"model": model.name})

        return ActionResult().report("validation", report)

    def register(self, registry: ActionRegistry) -> None:
        """Register model actions."""

        registry.register("validate", self.validate)
